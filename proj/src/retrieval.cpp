#include "subspace_sets/retrieval.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include "subspace_sets/errors.hpp"
#include "subspace_sets/parallel.hpp"
#include "subspace_sets/random.hpp"
#include "subspace_sets/subspace.hpp"
#include "subspace_sets/text.hpp"

namespace subspace_sets {

namespace {

constexpr std::size_t kDerivedSpanSize = 5;

std::string check_words(const std::vector<std::string>& words,
                        std::unordered_set<std::string_view>& seen) {
  for (const auto& w : words) {
    if (!seen.insert(w).second) return w;
  }
  return {};
}

std::unordered_set<std::string_view> as_set(const std::vector<std::string>& v) {
  return {v.begin(), v.end()};
}

// Candidate pool: every table index whose word is not a span word.
std::vector<std::size_t> candidate_pool(const WordSetSpec& spec,
                                        const EmbeddingTable& table,
                                        std::size_t& excluded) {
  std::vector<bool> is_span(table.size(), false);
  excluded = 0;
  for (const auto& w : spec.span_words) {
    if (const auto i = table.index_of(w)) {
      is_span[*i] = true;
      ++excluded;
    }
  }
  std::vector<std::size_t> pool;
  pool.reserve(table.size() - excluded);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!is_span[i]) pool.push_back(i);
  }
  return pool;
}

std::unordered_map<std::string_view, std::size_t> rank_index(
    const RankedList& ranking, std::span<const std::string> test_words) {
  std::unordered_map<std::string_view, std::size_t> wanted;
  for (const auto& w : test_words) wanted.emplace(w, 0);
  std::size_t found = 0;
  for (std::size_t i = 0; i < ranking.entries.size() && found < wanted.size(); ++i) {
    const auto it = wanted.find(ranking.entries[i].word);
    if (it != wanted.end() && it->second == 0) {
      it->second = i + 1;
      ++found;
    }
  }
  return wanted;
}

}  // namespace

void validate(const WordSetSpec& spec) {
  if (spec.span_words.empty()) {
    throw InvalidInput("set '" + spec.name + "' has no span words");
  }
  std::unordered_set<std::string_view> seen;
  if (auto dup = check_words(spec.span_words, seen); !dup.empty()) {
    throw InvalidInput("set '" + spec.name + "' repeats span word '" + dup + "'");
  }
  std::unordered_set<std::string_view> test_seen;
  if (auto dup = check_words(spec.test_words, test_seen); !dup.empty()) {
    throw InvalidInput("set '" + spec.name + "' repeats test word '" + dup + "'");
  }
  for (const auto& w : spec.test_words) {
    if (seen.contains(w)) {
      throw InvalidInput("set '" + spec.name + "' has '" + w +
                         "' in both span and test");
    }
  }
}

std::vector<WordSetSpec> read_set_dataset(std::istream& in) {
  std::vector<WordSetSpec> sets;
  std::unordered_set<std::string> names;
  std::string line;
  std::size_t line_no = 0;
  // 0: expecting "set", 1: expecting "span", 2: expecting "test"
  int state = 0;
  std::size_t record_line = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = text::split_whitespace(text::chomp(line));
    if (fields.empty()) {
      if (state != 0) throw ParseError(line_no, "incomplete set record");
      continue;
    }
    const std::string_view key = fields.front();
    const auto words = [&] {
      std::vector<std::string> out;
      for (std::size_t i = 1; i < fields.size(); ++i) out.emplace_back(fields[i]);
      return out;
    };
    if (state == 0) {
      if (key != "set" || fields.size() != 2) {
        throw ParseError(line_no, "expected 'set <name>'");
      }
      WordSetSpec spec;
      spec.name = std::string(fields[1]);
      if (!names.insert(spec.name).second) {
        throw ParseError(line_no, "duplicate set name '" + spec.name + "'");
      }
      sets.push_back(std::move(spec));
      record_line = line_no;
      state = 1;
    } else if (state == 1) {
      if (key != "span") throw ParseError(line_no, "expected 'span w1 w2 …'");
      sets.back().span_words = words();
      state = 2;
    } else {
      if (key != "test") throw ParseError(line_no, "expected 'test w1 w2 …'");
      sets.back().test_words = words();
      try {
        validate(sets.back());
      } catch (const InvalidInput& e) {
        throw ParseError(record_line, e.what());
      }
      state = 0;
    }
  }
  if (state != 0) throw ParseError(line_no, "incomplete set record at end of file");
  return sets;
}

std::vector<WordSetSpec> load_set_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return read_set_dataset(in);
}

void write_set_dataset(std::ostream& out, const std::vector<WordSetSpec>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i > 0) out << '\n';
    out << "set " << sets[i].name << "\nspan";
    for (const auto& w : sets[i].span_words) out << ' ' << w;
    out << "\ntest";
    for (const auto& w : sets[i].test_words) out << ' ' << w;
    out << '\n';
  }
}

ExpansionMethod parse_expansion_method(std::string_view name) {
  if (name == "subspace") return ExpansionMethod::subspace;
  if (name == "fuzzy") return ExpansionMethod::fuzzy;
  if (name == "near") return ExpansionMethod::near;
  throw InvalidInput("unknown expansion method: " + std::string(name));
}

std::string_view to_string(ExpansionMethod method) {
  switch (method) {
    case ExpansionMethod::subspace:
      return "subspace";
    case ExpansionMethod::fuzzy:
      return "fuzzy";
    case ExpansionMethod::near:
      return "near";
  }
  return "?";
}

Expansion expand_set(const WordSetSpec& spec, const EmbeddingTable& table,
                     ExpansionMethod method, unsigned threads) {
  Expansion out;
  std::vector<std::size_t> span_rows_idx;
  for (const auto& w : spec.span_words) {
    if (const auto i = table.index_of(w)) {
      span_rows_idx.push_back(*i);
    } else {
      ++out.span_oov;
    }
  }
  if (span_rows_idx.empty()) {
    throw EmptySpan("no span word of set '" + spec.name + "' is in vocabulary");
  }
  out.span_used = span_rows_idx.size();

  DenseMatrix span_vectors(static_cast<Eigen::Index>(span_rows_idx.size()),
                           static_cast<Eigen::Index>(table.dim()));
  for (std::size_t i = 0; i < span_rows_idx.size(); ++i) {
    span_vectors.row(static_cast<Eigen::Index>(i)) =
        table.vector(span_rows_idx[i]).transpose();
  }

  const std::vector<std::size_t> pool = candidate_pool(spec, table, out.excluded);
  std::vector<double> scores(pool.size());

  switch (method) {
    case ExpansionMethod::subspace: {
      const Subspace s = span_rows(span_vectors);
      parallel_for(pool.size(), threads, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
          scores[i] = soft_membership(table.vector(pool[i]), s);
        }
      });
      break;
    }
    case ExpansionMethod::fuzzy: {
      const DenseVector pooled = span_vectors.colwise().maxCoeff().transpose();
      if (pooled.norm() == 0.0) {
        throw InvalidInput("max-pooled span vector of set '" + spec.name +
                           "' is zero");
      }
      parallel_for(pool.size(), threads, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
          scores[i] = cosine(table.vector(pool[i]), pooled);
        }
      });
      break;
    }
    case ExpansionMethod::near: {
      parallel_for(pool.size(), threads, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
          double best = -2.0;
          for (Eigen::Index j = 0; j < span_vectors.rows(); ++j) {
            best = std::max(best, cosine(table.vector(pool[i]),
                                         span_vectors.row(j).transpose()));
          }
          scores[i] = best;
        }
      });
      break;
    }
  }

  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (scores[x] != scores[y]) return scores[x] > scores[y];
    return x < y;
  });
  out.ranking.entries.reserve(order.size());
  for (const std::size_t i : order) {
    out.ranking.entries.push_back({table.word(pool[i]), scores[i]});
  }
  return out;
}

RankedList random_ranking(const WordSetSpec& spec, const EmbeddingTable& table,
                          std::uint64_t seed) {
  std::size_t excluded = 0;
  std::vector<std::size_t> pool = candidate_pool(spec, table, excluded);
  Rng rng(seed);
  shuffle(pool, rng);
  RankedList out;
  out.entries.reserve(pool.size());
  const double n = static_cast<double>(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    out.entries.push_back({table.word(pool[i]), 1.0 - static_cast<double>(i) / n});
  }
  return out;
}

std::vector<std::size_t> test_ranks(const RankedList& ranking,
                                    std::span<const std::string> test_words) {
  const auto ranks = rank_index(ranking, test_words);
  std::vector<std::size_t> out;
  std::unordered_set<std::string_view> emitted;
  for (const auto& w : test_words) {
    const std::size_t r = ranks.at(w);
    if (r != 0 && emitted.insert(w).second) out.push_back(r);
  }
  return out;
}

std::size_t missing_test_words(const RankedList& ranking,
                               std::span<const std::string> test_words) {
  const auto ranks = rank_index(ranking, test_words);
  return static_cast<std::size_t>(
      std::count_if(ranks.begin(), ranks.end(),
                    [](const auto& kv) { return kv.second == 0; }));
}

double recall_at_k(const RankedList& ranking,
                   std::span<const std::string> test_words, std::size_t k) {
  if (k < 1) throw InvalidInput("recall_at_k needs k >= 1");
  if (test_words.empty()) throw EmptyTestSet("no test words");
  const auto ranks = test_ranks(ranking, test_words);
  if (ranks.empty()) throw EmptyTestSet("no test word is in vocabulary");
  const auto hits = std::count_if(ranks.begin(), ranks.end(),
                                  [k](std::size_t r) { return r <= k; });
  return static_cast<double>(hits) / static_cast<double>(ranks.size());
}

double median_of(std::vector<std::size_t> ranks) {
  if (ranks.empty()) throw EmptyTestSet("median of no ranks");
  std::sort(ranks.begin(), ranks.end());
  const std::size_t n = ranks.size();
  if (n % 2 == 1) return static_cast<double>(ranks[n / 2]);
  return (static_cast<double>(ranks[n / 2 - 1]) +
          static_cast<double>(ranks[n / 2])) /
         2.0;
}

double median_rank(const RankedList& ranking,
                   std::span<const std::string> test_words) {
  if (test_words.empty()) throw EmptyTestSet("no test words");
  auto ranks = test_ranks(ranking, test_words);
  if (ranks.empty()) throw EmptyTestSet("no test word is in vocabulary");
  return median_of(std::move(ranks));
}

SetOperation parse_set_operation(std::string_view name) {
  if (name == "union") return SetOperation::union_of;
  if (name == "intersect" || name == "intersection") {
    return SetOperation::intersection_of;
  }
  throw InvalidInput("unknown set operation: " + std::string(name));
}

std::vector<WordSetSpec> gen_derived_sets(std::span<const WordSetSpec> sets,
                                          SetOperation op, std::uint64_t seed,
                                          std::size_t count,
                                          std::size_t union_cap,
                                          std::size_t intersect_min) {
  if (sets.size() < 2) throw InvalidInput("need at least two sets");
  if (count < 1) throw InvalidInput("count must be at least 1");
  if (op == SetOperation::union_of && union_cap < 1) {
    throw InvalidInput("union_cap must be at least 1");
  }

  const auto full_words = [](const WordSetSpec& s) {
    std::vector<std::string> all = s.span_words;
    all.insert(all.end(), s.test_words.begin(), s.test_words.end());
    return all;
  };

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) pairs.emplace_back(i, j);
  }
  Rng rng(seed);
  shuffle(pairs, rng);

  std::vector<WordSetSpec> out;
  for (const auto& [i, j] : pairs) {
    if (out.size() == count) break;
    const auto x = full_words(sets[i]);
    const auto y = full_words(sets[j]);
    std::vector<std::string> words;
    std::unordered_set<std::string_view> seen;
    if (op == SetOperation::union_of) {
      for (const auto* list : {&x, &y}) {
        for (const auto& w : *list) {
          if (seen.insert(w).second) words.push_back(w);
        }
      }
    } else {
      const auto in_y = as_set(y);
      for (const auto& w : x) {
        if (in_y.contains(w) && seen.insert(w).second) words.push_back(w);
      }
      if (words.size() < intersect_min) continue;
    }
    if (words.empty()) continue;

    // A full shuffle followed by truncation is a uniform sample without
    // replacement, and also fixes the span/test split order.
    shuffle(words, rng);
    if (op == SetOperation::union_of && words.size() > union_cap) {
      words.resize(union_cap);
    }
    WordSetSpec derived;
    derived.name = sets[i].name + (op == SetOperation::union_of ? "|" : "&") +
                   sets[j].name;
    const std::size_t n_span = std::min(kDerivedSpanSize, words.size());
    derived.span_words.assign(words.begin(), words.begin() + n_span);
    derived.test_words.assign(words.begin() + n_span, words.end());
    out.push_back(std::move(derived));
  }
  if (out.size() < count) {
    throw InsufficientPairs("only " + std::to_string(out.size()) + " of " +
                            std::to_string(count) +
                            " derived sets could be built");
  }
  return out;
}

}  // namespace subspace_sets
