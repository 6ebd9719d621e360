#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subspace_sets/embeddings.hpp"

namespace subspace_sets {

/// A concept word set split into seed ("span") words and held-out test words.
struct WordSetSpec {
  std::string name;
  std::vector<std::string> span_words;
  std::vector<std::string> test_words;
};

/// Throws InvalidInput if span_words is empty, either list has duplicates, or
/// the lists overlap.
void validate(const WordSetSpec& spec);

/// Blank-line separated records of `set <name>`, `span w…`, `test w…`.
std::vector<WordSetSpec> read_set_dataset(std::istream& in);
std::vector<WordSetSpec> load_set_dataset(const std::filesystem::path& path);
void write_set_dataset(std::ostream& out, const std::vector<WordSetSpec>& sets);

enum class ExpansionMethod { subspace, fuzzy, near };

ExpansionMethod parse_expansion_method(std::string_view name);
std::string_view to_string(ExpansionMethod method);

struct RankedEntry {
  std::string word;
  double score;
};

/// Candidates sorted by descending score; ties keep table insertion order.
struct RankedList {
  std::vector<RankedEntry> entries;
};

struct Expansion {
  RankedList ranking;
  std::size_t span_oov = 0;     // span words skipped as out of vocabulary
  std::size_t span_used = 0;    // span words that shaped the representation
  std::size_t excluded = 0;     // span words removed from the candidate pool
};

/// Ranks every table word except the span words by membership in the set.
///
///   subspace: soft membership in span(span vectors)
///   fuzzy:    cosine to the element-wise max of the span vectors
///   near:     max cosine to any span vector
///
/// Throws EmptySpan if no span word is in the table. threads == 0 uses the
/// hardware concurrency; scores do not depend on it.
Expansion expand_set(const WordSetSpec& spec, const EmbeddingTable& table,
                     ExpansionMethod method, unsigned threads = 0);

/// Uniformly shuffled candidate pool (the "random" reference ranking).
RankedList random_ranking(const WordSetSpec& spec, const EmbeddingTable& table,
                          std::uint64_t seed);

/// 1-based ranks of the test words present in the ranking, in test order.
std::vector<std::size_t> test_ranks(const RankedList& ranking,
                                    std::span<const std::string> test_words);

/// Number of test words absent from the ranking.
std::size_t missing_test_words(const RankedList& ranking,
                               std::span<const std::string> test_words);

/// Fraction of present test words within the top k. Throws EmptyTestSet if
/// none is present.
double recall_at_k(const RankedList& ranking,
                   std::span<const std::string> test_words, std::size_t k);

/// Median 1-based rank of present test words (mean of the middle two for an
/// even count). Throws EmptyTestSet if none is present.
double median_rank(const RankedList& ranking,
                   std::span<const std::string> test_words);

/// Median of a non-empty list of ranks.
double median_of(std::vector<std::size_t> ranks);

enum class SetOperation { union_of, intersection_of };

SetOperation parse_set_operation(std::string_view name);

/// Builds `count` sets by combining seeded random pairs of distinct input sets
/// at the symbol level. Unions are sampled down to union_cap words;
/// intersections with fewer than intersect_min words are rejected. Each
/// result is shuffled and split into 5 span words and the remaining test
/// words. Throws InsufficientPairs when all pairs are exhausted first.
std::vector<WordSetSpec> gen_derived_sets(std::span<const WordSetSpec> sets,
                                          SetOperation op, std::uint64_t seed,
                                          std::size_t count,
                                          std::size_t union_cap,
                                          std::size_t intersect_min);

}  // namespace subspace_sets
