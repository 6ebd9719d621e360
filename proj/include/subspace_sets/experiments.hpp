#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "subspace_sets/embeddings.hpp"
#include "subspace_sets/retrieval.hpp"
#include "subspace_sets/similarity.hpp"

namespace subspace_sets {

// ---------------------------------------------------------------------------
// Sentence similarity (STS)

enum class StsMethod { subspace_bertscore, bertscore, avg_cos };
enum class Metric { P, R, F };

StsMethod parse_sts_method(std::string_view name);
std::string_view to_string(StsMethod method);
Metric parse_metric(std::string_view name);
std::string_view to_string(Metric metric);

struct StsPair {
  std::string pair_id;
  double gold = 0.0;
  std::string id_a;
  std::string id_b;
};

/// TSV `pair_id \t gold \t id_a \t id_b`, no header.
std::vector<StsPair> read_sts_pairs(std::istream& in);
std::vector<StsPair> load_sts_pairs(const std::filesystem::path& path);

struct PairScore {
  std::string pair_id;
  ScoreTriple score;  // avg_cos fills all three fields with the cosine
};

struct EvalReport {
  std::string method;
  std::string weighting;
  Metric metric = Metric::F;
  double spearman_rho = 0.0;
  std::size_t n_pairs = 0;
};

struct StsResult {
  EvalReport report;
  std::vector<PairScore> pair_scores;  // in pair-file order
};

/// Scores every pair and correlates the chosen metric with the gold scores.
/// Throws InvalidCombination for avg_cos with P or R, MissingSentence for an
/// unknown id.
StsResult run_sts(const std::vector<StsPair>& pairs,
                  const std::vector<SentenceEmbedding>& sentences,
                  StsMethod method, Metric metric, Weighting weighting,
                  unsigned threads = 0);

/// `pair_id \t P \t R \t F` with 9 fixed decimals.
void write_pair_scores(std::ostream& out, const std::vector<PairScore>& scores);
void write_sts_report(std::ostream& out, const EvalReport& report);

// ---------------------------------------------------------------------------
// Set retrieval

/// The three expansion methods plus the seeded random reference ranking.
enum class RetrievalMethod { subspace, fuzzy, near, random };

RetrievalMethod parse_retrieval_method(std::string_view name);
std::string_view to_string(RetrievalMethod method);

struct SetResult {
  std::string set_name;
  std::vector<double> recall;      // one per k
  double median = 0.0;
  std::vector<std::size_t> ranks;  // present test words, test order
  std::size_t span_oov = 0;
  std::size_t test_oov = 0;
  std::size_t excluded = 0;
};

struct RetrievalReport {
  std::string method;
  std::vector<std::size_t> ks;
  std::vector<SetResult> sets;
  std::vector<double> macro_recall;  // mean over sets, one per k
  double pooled_median = 0.0;        // median over all test ranks of all sets
  double mean_set_median = 0.0;
};

RetrievalReport run_retrieval(const std::vector<WordSetSpec>& sets,
                              const EmbeddingTable& table,
                              RetrievalMethod method,
                              const std::vector<std::size_t>& ks,
                              std::uint64_t seed = 0, unsigned threads = 0);

/// Header, one row per set, then a `__macro__` row (pooled median).
void write_retrieval_report(std::ostream& out, const RetrievalReport& report);
/// Per-set OOV and exclusion counts.
void write_retrieval_meta(std::ostream& out, const RetrievalReport& report);

// ---------------------------------------------------------------------------
// Vector files for the algebra commands

/// One vector per line as whitespace-separated decimals; blank lines skipped.
/// All vectors must share a dimension.
std::vector<DenseVector> read_vectors(std::istream& in);
std::vector<DenseVector> load_vectors(const std::filesystem::path& path);

}  // namespace subspace_sets
