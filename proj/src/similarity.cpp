#include "subspace_sets/similarity.hpp"

#include <limits>
#include <string>

#include "subspace_sets/errors.hpp"
#include "subspace_sets/subspace.hpp"

namespace subspace_sets {

namespace {

void check_pair(const SentenceEmbedding& a, const SentenceEmbedding& b) {
  if (a.size() == 0 || b.size() == 0) {
    throw InvalidInput("sentences must have at least one token");
  }
  if (static_cast<std::size_t>(a.vectors.rows()) != a.size() ||
      static_cast<std::size_t>(b.vectors.rows()) != b.size()) {
    throw InvalidInput("token and vector counts differ");
  }
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  require_finite(a.vectors, "sentence vectors");
  require_finite(b.vectors, "sentence vectors");
}

// Σ w(x_i)·score(x_i) / Σ w(x_i), summed in token order.
template <typename Score>
double weighted_mean(const DenseMatrix& tokens, Weighting w, Score&& score) {
  double num = 0.0;
  double den = 0.0;
  for (Eigen::Index i = 0; i < tokens.rows(); ++i) {
    const DenseVector v = tokens.row(i).transpose();
    const double weight = token_weight(v, w);
    num += weight * score(v);
    den += weight;
  }
  return num / den;
}

}  // namespace

Weighting parse_weighting(std::string_view name) {
  if (name == "uniform") return Weighting::uniform;
  if (name == "l2" || name == "l2_norm") return Weighting::l2_norm;
  throw InvalidInput("unknown weighting: " + std::string(name));
}

std::string_view to_string(Weighting w) {
  return w == Weighting::uniform ? "uniform" : "l2";
}

double token_weight(const Eigen::Ref<const DenseVector>& v, Weighting w) {
  const double n = v.norm();
  if (n == 0.0) throw InvalidInput("zero token vector");
  return w == Weighting::uniform ? 1.0 : n;
}

double harmonic_f(double precision, double recall) {
  const double sum = precision + recall;
  return sum == 0.0 ? 0.0 : 2.0 * precision * recall / sum;
}

double vector_indicator(const Eigen::Ref<const DenseVector>& a,
                        const DenseMatrix& b_vectors) {
  if (b_vectors.rows() == 0) {
    throw InvalidInput("vector_indicator needs at least one reference vector");
  }
  double best = -std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < b_vectors.rows(); ++j) {
    best = std::max(best, cosine(a, b_vectors.row(j).transpose()));
  }
  return best;
}

ScoreTriple bertscore(const SentenceEmbedding& a, const SentenceEmbedding& b,
                      Weighting w) {
  check_pair(a, b);
  ScoreTriple out;
  out.recall = weighted_mean(a.vectors, w, [&](const DenseVector& v) {
    return vector_indicator(v, b.vectors);
  });
  out.precision = weighted_mean(b.vectors, w, [&](const DenseVector& v) {
    return vector_indicator(v, a.vectors);
  });
  out.f = harmonic_f(out.precision, out.recall);
  return out;
}

ScoreTriple subspace_bertscore(const SentenceEmbedding& a,
                               const SentenceEmbedding& b, Weighting w) {
  check_pair(a, b);
  const Subspace span_a = span_rows(a.vectors);
  const Subspace span_b = span_rows(b.vectors);
  if (span_a.rank() == 0 || span_b.rank() == 0) {
    throw InvalidInput("sentence vectors are all zero");
  }
  ScoreTriple out;
  out.recall = weighted_mean(a.vectors, w, [&](const DenseVector& v) {
    return soft_membership(v, span_b);
  });
  out.precision = weighted_mean(b.vectors, w, [&](const DenseVector& v) {
    return soft_membership(v, span_a);
  });
  out.f = harmonic_f(out.precision, out.recall);
  return out;
}

double avg_cos(const SentenceEmbedding& a, const SentenceEmbedding& b) {
  check_pair(a, b);
  const DenseVector mean_a = a.vectors.colwise().mean().transpose();
  const DenseVector mean_b = b.vectors.colwise().mean().transpose();
  if (mean_a.norm() == 0.0 || mean_b.norm() == 0.0) {
    throw InvalidInput("avg_cos: mean token vector is zero");
  }
  return cosine(mean_a, mean_b);
}

}  // namespace subspace_sets
