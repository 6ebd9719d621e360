#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subspace_sets/errors.hpp"
#include "subspace_sets/experiments.hpp"
#include "subspace_sets/subspace.hpp"
#include "subspace_sets/text.hpp"

namespace subspace_sets::cli {

namespace fs = std::filesystem;

namespace {

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw ParseError(0, "cannot write " + path.string());
  return out;
}

Subspace load_subspace(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return read_subspace(in);
}

void emit_subspace(const Subspace& s, const std::string& out_path,
                   std::ostream& out) {
  if (out_path.empty()) {
    write_subspace(out, s);
  } else {
    auto file = open_output(out_path);
    write_subspace(file, s);
  }
}

struct StsOptions {
  std::string pairs, embeddings, method, metric = "F", weighting = "uniform", out;
  unsigned threads = 0;
};

struct RetrieveOptions {
  std::string dataset, embeddings, format = "glove_text", method, out;
  std::vector<std::size_t> ks;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

struct GenOptions {
  std::string dataset, op, out;
  std::uint64_t seed = 0;
  std::size_t count = 100, union_cap = 50, intersect_min = 10;
};

struct AlgebraOptions {
  std::string first, second, out;
  double rel_tol = kDefaultRankTolerance;
  double alpha = kDefaultIntersectionAlpha;
  double tol = 1e-8;
  std::size_t dim = 0;
  bool hard = false;
};

void run_sts_command(const StsOptions& o, std::ostream& out) {
  const auto pairs = load_sts_pairs(o.pairs);
  const auto sentences = load_token_embeddings(o.embeddings);
  const StsResult result =
      run_sts(pairs, sentences, parse_sts_method(o.method), parse_metric(o.metric),
              parse_weighting(o.weighting), o.threads);
  if (!o.out.empty()) {
    fs::create_directories(o.out);
    auto scores = open_output(fs::path(o.out) / "scores.tsv");
    write_pair_scores(scores, result.pair_scores);
    auto report = open_output(fs::path(o.out) / "report.tsv");
    write_sts_report(report, result.report);
  }
  write_sts_report(out, result.report);
}

void run_retrieve_command(const RetrieveOptions& o, std::ostream& out) {
  const auto sets = load_set_dataset(o.dataset);
  const auto table =
      load_word_embeddings(o.embeddings, parse_embedding_format(o.format));
  const auto ks = o.ks.empty() ? std::vector<std::size_t>{100, 1000} : o.ks;
  const RetrievalReport report = run_retrieval(
      sets, table, parse_retrieval_method(o.method), ks, o.seed, o.threads);
  if (!o.out.empty()) {
    fs::create_directories(o.out);
    auto file = open_output(fs::path(o.out) / "report.tsv");
    write_retrieval_report(file, report);
    auto meta = open_output(fs::path(o.out) / "meta.tsv");
    write_retrieval_meta(meta, report);
  }
  write_retrieval_report(out, report);
}

void run_gen_command(const GenOptions& o, std::ostream& out) {
  const auto sets = load_set_dataset(o.dataset);
  const auto derived = gen_derived_sets(sets, parse_set_operation(o.op), o.seed,
                                        o.count, o.union_cap, o.intersect_min);
  if (o.out.empty()) {
    write_set_dataset(out, derived);
  } else {
    auto file = open_output(o.out);
    write_set_dataset(file, derived);
  }
}

void run_span(const AlgebraOptions& o, std::ostream& out) {
  const auto vectors = load_vectors(o.first);
  std::size_t dim = o.dim;
  if (!vectors.empty()) {
    dim = static_cast<std::size_t>(vectors.front().size());
    if (o.dim != 0 && o.dim != dim) throw DimensionMismatch(o.dim, dim);
  }
  if (dim == 0) {
    throw InvalidInput("empty vector file: pass --dim for the ambient dimension");
  }
  emit_subspace(span(vectors, dim, o.rel_tol), o.out, out);
}

void run_member(const AlgebraOptions& o, std::ostream& out) {
  const Subspace s = load_subspace(o.first);
  for (const auto& v : load_vectors(o.second)) {
    if (o.hard) {
      out << (hard_membership(v, s, o.tol) ? 1 : 0) << '\n';
    } else {
      out << text::format_fixed(soft_membership(v, s), 9) << '\n';
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Word sets as linear subspaces: set operations, sentence "
               "similarity and set expansion."};
  app.name(args.empty() ? "subspace-sets" : fs::path(args[0]).filename().string());
  app.require_subcommand(1);

  StsOptions sts;
  auto* sts_cmd = app.add_subcommand("sts", "Score sentence pairs and correlate with gold");
  sts_cmd->add_option("--pairs", sts.pairs, "pair_id<TAB>gold<TAB>id_a<TAB>id_b")
      ->required();
  sts_cmd->add_option("--embeddings", sts.embeddings, "token-embedding file")
      ->required();
  sts_cmd->add_option("--method", sts.method)
      ->required()
      ->check(CLI::IsMember({"subspace_bertscore", "bertscore", "avg_cos"}));
  sts_cmd->add_option("--metric", sts.metric)->check(CLI::IsMember({"P", "R", "F"}));
  sts_cmd->add_option("--weighting", sts.weighting)
      ->check(CLI::IsMember({"uniform", "l2"}));
  sts_cmd->add_option("--out", sts.out, "directory for scores.tsv and report.tsv");
  sts_cmd->add_option("--threads", sts.threads, "0 = all cores");

  RetrieveOptions ret;
  auto* ret_cmd = app.add_subcommand("retrieve", "Set expansion with R@k and median rank");
  ret_cmd->add_option("--dataset", ret.dataset, "set-dataset file")->required();
  ret_cmd->add_option("--embeddings", ret.embeddings, "word-embedding file")->required();
  ret_cmd->add_option("--format", ret.format)
      ->check(CLI::IsMember({"word2vec_text", "glove_text"}));
  ret_cmd->add_option("--method", ret.method)
      ->required()
      ->check(CLI::IsMember({"subspace", "fuzzy", "near", "random"}));
  ret_cmd->add_option("--k", ret.ks, "cutoff for R@k (repeatable; default 100 1000)")
      ->check(CLI::PositiveNumber);
  ret_cmd->add_option("--seed", ret.seed, "seed for --method random");
  ret_cmd->add_option("--out", ret.out, "directory for report.tsv and meta.tsv");
  ret_cmd->add_option("--threads", ret.threads, "0 = all cores");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen-setops", "Derive union/intersection set datasets");
  gen_cmd->add_option("--dataset", gen.dataset)->required();
  gen_cmd->add_option("--op", gen.op)->required()->check(CLI::IsMember({"union", "intersect"}));
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--count", gen.count)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--union-cap", gen.union_cap)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--intersect-min", gen.intersect_min);
  gen_cmd->add_option("--out", gen.out, "output file (default stdout)");

  AlgebraOptions alg;
  auto* alg_cmd = app.add_subcommand("algebra", "Subspace set operations on files");
  alg_cmd->require_subcommand(1);
  auto* span_cmd = alg_cmd->add_subcommand("span", "Span of the vectors in a file");
  span_cmd->add_option("vectors", alg.first)->required();
  span_cmd->add_option("--rel-tol", alg.rel_tol);
  span_cmd->add_option("--dim", alg.dim, "ambient dimension for an empty file");
  span_cmd->add_option("--out", alg.out);
  auto* union_cmd = alg_cmd->add_subcommand("union", "Sum space of two subspaces");
  union_cmd->add_option("a", alg.first)->required();
  union_cmd->add_option("b", alg.second)->required();
  union_cmd->add_option("--out", alg.out);
  auto* inter_cmd = alg_cmd->add_subcommand("intersect", "Intersection of two subspaces");
  inter_cmd->add_option("a", alg.first)->required();
  inter_cmd->add_option("b", alg.second)->required();
  inter_cmd->add_option("--alpha", alg.alpha);
  inter_cmd->add_option("--out", alg.out);
  auto* comp_cmd = alg_cmd->add_subcommand("complement", "Orthogonal complement");
  comp_cmd->add_option("a", alg.first)->required();
  comp_cmd->add_option("--out", alg.out);
  auto* member_cmd =
      alg_cmd->add_subcommand("member", "Membership of each vector in a subspace");
  member_cmd->add_option("subspace", alg.first)->required();
  member_cmd->add_option("vectors", alg.second)->required();
  member_cmd->add_flag("--hard", alg.hard, "print 1/0 hard membership instead");
  member_cmd->add_option("--tol", alg.tol, "residual tolerance for --hard");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("subspace-sets");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (sts_cmd->parsed()) {
      run_sts_command(sts, out);
    } else if (ret_cmd->parsed()) {
      run_retrieve_command(ret, out);
    } else if (gen_cmd->parsed()) {
      run_gen_command(gen, out);
    } else if (span_cmd->parsed()) {
      run_span(alg, out);
    } else if (union_cmd->parsed()) {
      emit_subspace(unite(load_subspace(alg.first), load_subspace(alg.second)),
                    alg.out, out);
    } else if (inter_cmd->parsed()) {
      emit_subspace(intersect(load_subspace(alg.first), load_subspace(alg.second),
                              alg.alpha),
                    alg.out, out);
    } else if (comp_cmd->parsed()) {
      emit_subspace(complement(load_subspace(alg.first)), alg.out, out);
    } else if (member_cmd->parsed()) {
      run_member(alg, out);
    }
  } catch (const InvalidCombination& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NumericalFailure& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kSuccess;
}

}  // namespace subspace_sets::cli
