#include "subspace_sets/experiments.hpp"

#include <fstream>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <unordered_map>

#include "subspace_sets/errors.hpp"
#include "subspace_sets/parallel.hpp"
#include "subspace_sets/stats.hpp"
#include "subspace_sets/text.hpp"

namespace subspace_sets {

namespace {

constexpr int kScoreDecimals = 9;
constexpr int kRecallDecimals = 6;

double metric_value(const ScoreTriple& s, Metric m) {
  switch (m) {
    case Metric::P:
      return s.precision;
    case Metric::R:
      return s.recall;
    case Metric::F:
      return s.f;
  }
  return s.f;
}

std::string rank_text(double median) { return text::format_fixed(median, 1); }

}  // namespace

StsMethod parse_sts_method(std::string_view name) {
  if (name == "subspace_bertscore") return StsMethod::subspace_bertscore;
  if (name == "bertscore") return StsMethod::bertscore;
  if (name == "avg_cos") return StsMethod::avg_cos;
  throw InvalidInput("unknown similarity method: " + std::string(name));
}

std::string_view to_string(StsMethod method) {
  switch (method) {
    case StsMethod::subspace_bertscore:
      return "subspace_bertscore";
    case StsMethod::bertscore:
      return "bertscore";
    case StsMethod::avg_cos:
      return "avg_cos";
  }
  return "?";
}

Metric parse_metric(std::string_view name) {
  if (name == "P") return Metric::P;
  if (name == "R") return Metric::R;
  if (name == "F") return Metric::F;
  throw InvalidInput("unknown metric: " + std::string(name));
}

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::P:
      return "P";
    case Metric::R:
      return "R";
    case Metric::F:
      return "F";
  }
  return "?";
}

std::vector<StsPair> read_sts_pairs(std::istream& in) {
  std::vector<StsPair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = text::chomp(line);
    if (row.find_first_not_of(" \t") == std::string_view::npos) continue;
    const auto fields = text::split(row, '\t');
    if (fields.size() != 4) {
      throw ParseError(line_no, "expected 'pair_id<TAB>gold<TAB>id_a<TAB>id_b'");
    }
    StsPair p;
    p.pair_id = std::string(fields[0]);
    p.gold = text::parse_double(fields[1], line_no);
    p.id_a = std::string(fields[2]);
    p.id_b = std::string(fields[3]);
    if (p.pair_id.empty() || p.id_a.empty() || p.id_b.empty()) {
      throw ParseError(line_no, "empty identifier");
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

std::vector<StsPair> load_sts_pairs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return read_sts_pairs(in);
}

StsResult run_sts(const std::vector<StsPair>& pairs,
                  const std::vector<SentenceEmbedding>& sentences,
                  StsMethod method, Metric metric, Weighting weighting,
                  unsigned threads) {
  if (method == StsMethod::avg_cos && metric != Metric::F) {
    throw InvalidCombination("avg_cos has no precision/recall decomposition");
  }
  std::unordered_map<std::string_view, const SentenceEmbedding*> by_id;
  for (const auto& s : sentences) by_id.emplace(s.id, &s);
  std::vector<std::pair<const SentenceEmbedding*, const SentenceEmbedding*>> refs;
  refs.reserve(pairs.size());
  for (const auto& p : pairs) {
    const auto a = by_id.find(p.id_a);
    if (a == by_id.end()) throw MissingSentence(p.id_a);
    const auto b = by_id.find(p.id_b);
    if (b == by_id.end()) throw MissingSentence(p.id_b);
    refs.emplace_back(a->second, b->second);
  }

  StsResult result;
  result.pair_scores.resize(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto& [a, b] = refs[i];
      ScoreTriple s;
      switch (method) {
        case StsMethod::subspace_bertscore:
          s = subspace_bertscore(*a, *b, weighting);
          break;
        case StsMethod::bertscore:
          s = bertscore(*a, *b, weighting);
          break;
        case StsMethod::avg_cos: {
          const double c = avg_cos(*a, *b);
          s = {c, c, c};
          break;
        }
      }
      result.pair_scores[i] = {pairs[i].pair_id, s};
    }
  });

  std::vector<double> gold;
  std::vector<double> predicted;
  gold.reserve(pairs.size());
  predicted.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    gold.push_back(pairs[i].gold);
    predicted.push_back(metric_value(result.pair_scores[i].score, metric));
  }
  result.report.method = std::string(to_string(method));
  result.report.weighting =
      method == StsMethod::avg_cos ? "-" : std::string(to_string(weighting));
  result.report.metric = metric;
  result.report.n_pairs = pairs.size();
  result.report.spearman_rho = spearman(predicted, gold);
  return result;
}

void write_pair_scores(std::ostream& out, const std::vector<PairScore>& scores) {
  for (const auto& s : scores) {
    out << s.pair_id << '\t' << text::format_fixed(s.score.precision, kScoreDecimals)
        << '\t' << text::format_fixed(s.score.recall, kScoreDecimals) << '\t'
        << text::format_fixed(s.score.f, kScoreDecimals) << '\n';
  }
}

void write_sts_report(std::ostream& out, const EvalReport& report) {
  out << "method\tweighting\tmetric\tspearman\tn_pairs\n"
      << report.method << '\t' << report.weighting << '\t'
      << to_string(report.metric) << '\t'
      << text::format_fixed(report.spearman_rho, kScoreDecimals) << '\t'
      << report.n_pairs << '\n';
}

RetrievalMethod parse_retrieval_method(std::string_view name) {
  if (name == "random") return RetrievalMethod::random;
  switch (parse_expansion_method(name)) {
    case ExpansionMethod::subspace:
      return RetrievalMethod::subspace;
    case ExpansionMethod::fuzzy:
      return RetrievalMethod::fuzzy;
    case ExpansionMethod::near:
      return RetrievalMethod::near;
  }
  return RetrievalMethod::subspace;
}

std::string_view to_string(RetrievalMethod method) {
  switch (method) {
    case RetrievalMethod::subspace:
      return "subspace";
    case RetrievalMethod::fuzzy:
      return "fuzzy";
    case RetrievalMethod::near:
      return "near";
    case RetrievalMethod::random:
      return "random";
  }
  return "?";
}

RetrievalReport run_retrieval(const std::vector<WordSetSpec>& sets,
                              const EmbeddingTable& table,
                              RetrievalMethod method,
                              const std::vector<std::size_t>& ks,
                              std::uint64_t seed, unsigned threads) {
  if (sets.empty()) throw InvalidInput("dataset has no sets");
  if (ks.empty()) throw InvalidInput("at least one k is required");

  RetrievalReport report;
  report.method = std::string(to_string(method));
  report.ks = ks;
  report.macro_recall.assign(ks.size(), 0.0);
  std::vector<std::size_t> pooled;

  for (std::size_t s = 0; s < sets.size(); ++s) {
    const WordSetSpec& spec = sets[s];
    SetResult row;
    row.set_name = spec.name;
    RankedList ranking;
    if (method == RetrievalMethod::random) {
      // Distinct stream per set, reproducible from the one seed.
      ranking = random_ranking(spec, table, seed + s);
      std::size_t excluded = 0;
      for (const auto& w : spec.span_words) {
        if (table.index_of(w)) {
          ++excluded;
        } else {
          ++row.span_oov;
        }
      }
      row.excluded = excluded;
    } else {
      const auto expansion_method =
          method == RetrievalMethod::subspace ? ExpansionMethod::subspace
          : method == RetrievalMethod::fuzzy  ? ExpansionMethod::fuzzy
                                              : ExpansionMethod::near;
      Expansion e = expand_set(spec, table, expansion_method, threads);
      ranking = std::move(e.ranking);
      row.span_oov = e.span_oov;
      row.excluded = e.excluded;
    }
    for (const std::size_t k : ks) {
      row.recall.push_back(recall_at_k(ranking, spec.test_words, k));
    }
    row.median = median_rank(ranking, spec.test_words);
    row.ranks = test_ranks(ranking, spec.test_words);
    row.test_oov = missing_test_words(ranking, spec.test_words);
    pooled.insert(pooled.end(), row.ranks.begin(), row.ranks.end());
    for (std::size_t i = 0; i < ks.size(); ++i) {
      report.macro_recall[i] += row.recall[i];
    }
    report.mean_set_median += row.median;
    report.sets.push_back(std::move(row));
  }
  const double n = static_cast<double>(sets.size());
  for (auto& r : report.macro_recall) r /= n;
  report.mean_set_median /= n;
  report.pooled_median = median_of(std::move(pooled));
  return report;
}

void write_retrieval_report(std::ostream& out, const RetrievalReport& report) {
  out << "set_name\tmethod";
  for (const std::size_t k : report.ks) out << "\tR@" << k;
  out << "\tmedian\n";
  for (const auto& row : report.sets) {
    out << row.set_name << '\t' << report.method;
    for (const double r : row.recall) {
      out << '\t' << text::format_fixed(r, kRecallDecimals);
    }
    out << '\t' << rank_text(row.median) << '\n';
  }
  out << "__macro__\t" << report.method;
  for (const double r : report.macro_recall) {
    out << '\t' << text::format_fixed(r, kRecallDecimals);
  }
  out << '\t' << rank_text(report.pooled_median) << '\n';
}

void write_retrieval_meta(std::ostream& out, const RetrievalReport& report) {
  out << "set_name\tspan_oov\ttest_oov\tspan_excluded\ttest_ranked\tmedian\n";
  for (const auto& row : report.sets) {
    out << row.set_name << '\t' << row.span_oov << '\t' << row.test_oov << '\t'
        << row.excluded << '\t' << row.ranks.size() << '\t'
        << rank_text(row.median) << '\n';
  }
}

std::vector<DenseVector> read_vectors(std::istream& in) {
  std::vector<DenseVector> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = text::split_whitespace(text::chomp(line));
    if (fields.empty()) continue;
    if (!out.empty() && fields.size() != static_cast<std::size_t>(out.front().size())) {
      throw ParseError(line_no, "expected " + std::to_string(out.front().size()) +
                                    " values, got " + std::to_string(fields.size()));
    }
    DenseVector v(static_cast<Eigen::Index>(fields.size()));
    for (std::size_t j = 0; j < fields.size(); ++j) {
      v(static_cast<Eigen::Index>(j)) = text::parse_double(fields[j], line_no);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<DenseVector> load_vectors(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return read_vectors(in);
}

}  // namespace subspace_sets
