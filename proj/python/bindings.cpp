#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "subspace_sets/errors.hpp"
#include "subspace_sets/retrieval.hpp"
#include "subspace_sets/similarity.hpp"
#include "subspace_sets/stats.hpp"
#include "subspace_sets/subspace.hpp"

namespace py = pybind11;
namespace ss = subspace_sets;

namespace {

ss::SentenceEmbedding make_sentence(std::string id, std::vector<std::string> tokens,
                                    ss::DenseMatrix vectors) {
  if (static_cast<std::size_t>(vectors.rows()) != tokens.size()) {
    throw ss::InvalidInput("need one vector row per token");
  }
  return ss::SentenceEmbedding{std::move(id), std::move(tokens), std::move(vectors)};
}

ss::WordSetSpec make_spec(std::vector<std::string> span_words,
                          std::vector<std::string> test_words, std::string name) {
  ss::WordSetSpec spec{std::move(name), std::move(span_words), std::move(test_words)};
  ss::validate(spec);
  return spec;
}

ss::RankedList as_ranking(const std::vector<std::string>& words) {
  ss::RankedList r;
  const double n = static_cast<double>(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    r.entries.push_back({words[i], n - static_cast<double>(i)});
  }
  return r;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Word sets as linear subspaces of an embedding space";

  auto base = py::register_exception<ss::Error>(m, "SubspaceSetsError");
  py::register_exception<ss::InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<ss::DimensionMismatch>(m, "DimensionMismatch", base.ptr());
  py::register_exception<ss::NumericalFailure>(m, "NumericalFailure", base.ptr());
  py::register_exception<ss::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ss::OutOfVocabulary>(m, "OutOfVocabulary", base.ptr());
  py::register_exception<ss::EmptySpan>(m, "EmptySpan", base.ptr());
  py::register_exception<ss::EmptyTestSet>(m, "EmptyTestSet", base.ptr());
  py::register_exception<ss::InsufficientPairs>(m, "InsufficientPairs", base.ptr());
  py::register_exception<ss::DegenerateInput>(m, "DegenerateInput", base.ptr());
  py::register_exception<ss::MissingSentence>(m, "MissingSentence", base.ptr());
  py::register_exception<ss::InvalidCombination>(m, "InvalidCombination", base.ptr());

  m.def("orthonormal_rows", &ss::orthonormal_rows, py::arg("m"),
        py::arg("rel_tol") = ss::kDefaultRankTolerance);
  m.def(
      "thin_svd",
      [](const ss::DenseMatrix& mat) {
        ss::ThinSvd s = ss::thin_svd(mat);
        return py::make_tuple(s.u, s.singular_values, s.vt);
      },
      py::arg("m"), "Returns (U, singular_values, Vt).");
  m.def("projector_of", &ss::projector_of, py::arg("basis"));

  py::class_<ss::Subspace>(m, "Subspace")
      .def(py::init<std::size_t>(), py::arg("ambient_dim"))
      .def_static("from_orthonormal", &ss::Subspace::from_orthonormal,
                  py::arg("basis"), py::arg("tol") = 1e-9)
      .def_property_readonly("basis", &ss::Subspace::basis)
      .def_property_readonly("rank", &ss::Subspace::rank)
      .def_property_readonly("ambient_dim", &ss::Subspace::ambient_dim)
      .def("projector", &ss::Subspace::projector)
      .def("to_text",
           [](const ss::Subspace& s) {
             std::ostringstream out;
             ss::write_subspace(out, s);
             return out.str();
           })
      .def_static("from_text",
                  [](const std::string& text) {
                    std::istringstream in(text);
                    return ss::read_subspace(in);
                  })
      .def("__repr__", [](const ss::Subspace& s) {
        return "<Subspace rank=" + std::to_string(s.rank()) +
               " ambient_dim=" + std::to_string(s.ambient_dim()) + ">";
      });

  m.def("span", &ss::span_rows, py::arg("vectors"),
        py::arg("rel_tol") = ss::kDefaultRankTolerance,
        "Span of the rows of an (n, d) array.");
  m.def("union", &ss::unite, py::arg("a"), py::arg("b"));
  m.def("intersection", &ss::intersect, py::arg("a"), py::arg("b"),
        py::arg("alpha") = ss::kDefaultIntersectionAlpha);
  m.def("complement", &ss::complement, py::arg("a"));
  m.def(
      "soft_membership",
      [](const ss::DenseVector& v, const ss::Subspace& a) {
        return ss::soft_membership(v, a);
      },
      py::arg("v"), py::arg("a"));
  m.def(
      "hard_membership",
      [](const ss::DenseVector& v, const ss::Subspace& a, double tol) {
        return ss::hard_membership(v, a, tol);
      },
      py::arg("v"), py::arg("a"), py::arg("tol") = 1e-8);
  m.def("subspace_equal", &ss::subspace_equal, py::arg("a"), py::arg("b"),
        py::arg("tol") = 1e-8);

  py::class_<ss::ScoreTriple>(m, "ScoreTriple")
      .def_readonly("precision", &ss::ScoreTriple::precision)
      .def_readonly("recall", &ss::ScoreTriple::recall)
      .def_readonly("f", &ss::ScoreTriple::f)
      .def("__iter__",
           [](const ss::ScoreTriple& s) {
             return py::iter(py::make_tuple(s.precision, s.recall, s.f));
           })
      .def("__repr__", [](const ss::ScoreTriple& s) {
        return "ScoreTriple(precision=" + std::to_string(s.precision) +
               ", recall=" + std::to_string(s.recall) + ", f=" + std::to_string(s.f) +
               ")";
      });

  py::class_<ss::SentenceEmbedding>(m, "SentenceEmbedding")
      .def(py::init(&make_sentence), py::arg("id"), py::arg("tokens"),
           py::arg("vectors"))
      .def_readonly("id", &ss::SentenceEmbedding::id)
      .def_readonly("tokens", &ss::SentenceEmbedding::tokens)
      .def_readonly("vectors", &ss::SentenceEmbedding::vectors);

  const auto weighting = [](const std::string& name) {
    return ss::parse_weighting(name);
  };
  m.def(
      "vector_indicator",
      [](const ss::DenseVector& a, const ss::DenseMatrix& b) {
        return ss::vector_indicator(a, b);
      },
      py::arg("a"), py::arg("b_vectors"));
  m.def(
      "bertscore",
      [weighting](const ss::SentenceEmbedding& a, const ss::SentenceEmbedding& b,
                  const std::string& w) { return ss::bertscore(a, b, weighting(w)); },
      py::arg("a"), py::arg("b"), py::arg("weighting") = "uniform");
  m.def(
      "subspace_bertscore",
      [weighting](const ss::SentenceEmbedding& a, const ss::SentenceEmbedding& b,
                  const std::string& w) {
        return ss::subspace_bertscore(a, b, weighting(w));
      },
      py::arg("a"), py::arg("b"), py::arg("weighting") = "uniform");
  m.def("avg_cos", &ss::avg_cos, py::arg("a"), py::arg("b"));
  m.def(
      "spearman",
      [](const std::vector<double>& xs, const std::vector<double>& ys) {
        return ss::spearman(xs, ys);
      },
      py::arg("xs"), py::arg("ys"));

  py::class_<ss::EmbeddingTable>(m, "EmbeddingTable")
      .def_property_readonly("dim", &ss::EmbeddingTable::dim)
      .def_property_readonly("words", &ss::EmbeddingTable::words)
      .def_property_readonly("duplicate_count", &ss::EmbeddingTable::duplicate_count)
      .def("__len__", &ss::EmbeddingTable::size)
      .def("__contains__",
           [](const ss::EmbeddingTable& t, const std::string& w) {
             return t.index_of(w).has_value();
           })
      .def("lookup", [](const ss::EmbeddingTable& t, const std::string& w) {
        return ss::lookup(t, w);
      });
  m.def(
      "load_word_embeddings",
      [](const std::filesystem::path& path, const std::string& format) {
        return ss::load_word_embeddings(path, ss::parse_embedding_format(format));
      },
      py::arg("path"), py::arg("format") = "glove_text");
  m.def("load_token_embeddings", &ss::load_token_embeddings, py::arg("path"));

  m.def(
      "expand_set",
      [](const std::vector<std::string>& span_words, const ss::EmbeddingTable& table,
         const std::string& method, unsigned threads) {
        const auto spec = make_spec(span_words, {}, "query");
        auto e = ss::expand_set(spec, table, ss::parse_expansion_method(method), threads);
        std::vector<std::pair<std::string, double>> out;
        out.reserve(e.ranking.entries.size());
        for (auto& entry : e.ranking.entries) {
          out.emplace_back(std::move(entry.word), entry.score);
        }
        return out;
      },
      py::arg("span_words"), py::arg("table"), py::arg("method") = "subspace",
      py::arg("threads") = 0u,
      "Ranks all non-span words; returns [(word, score), ...] best first.");
  m.def(
      "recall_at_k",
      [](const std::vector<std::string>& ranking,
         const std::vector<std::string>& test_words, std::size_t k) {
        return ss::recall_at_k(as_ranking(ranking), test_words, k);
      },
      py::arg("ranking"), py::arg("test_words"), py::arg("k"));
  m.def(
      "median_rank",
      [](const std::vector<std::string>& ranking,
         const std::vector<std::string>& test_words) {
        return ss::median_rank(as_ranking(ranking), test_words);
      },
      py::arg("ranking"), py::arg("test_words"));
  m.def(
      "gen_derived_sets",
      [](const std::vector<std::tuple<std::string, std::vector<std::string>,
                                      std::vector<std::string>>>& sets,
         const std::string& op, std::uint64_t seed, std::size_t count,
         std::size_t union_cap, std::size_t intersect_min) {
        std::vector<ss::WordSetSpec> specs;
        for (const auto& [name, span_words, test_words] : sets) {
          specs.push_back(make_spec(span_words, test_words, name));
        }
        const auto derived =
            ss::gen_derived_sets(specs, ss::parse_set_operation(op), seed, count,
                                 union_cap, intersect_min);
        std::vector<std::tuple<std::string, std::vector<std::string>,
                               std::vector<std::string>>>
            out;
        for (const auto& d : derived) {
          out.emplace_back(d.name, d.span_words, d.test_words);
        }
        return out;
      },
      py::arg("sets"), py::arg("op"), py::arg("seed"), py::arg("count"),
      py::arg("union_cap") = 50, py::arg("intersect_min") = 10,
      "sets: [(name, span_words, test_words)]; returns the same shape.");
}
