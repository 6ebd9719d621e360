#pragma once

#include <string_view>

#include "subspace_sets/embeddings.hpp"
#include "subspace_sets/linalg.hpp"

namespace subspace_sets {

struct ScoreTriple {
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
};

/// Token importance: uniform (1) or the token vector's L2 norm.
enum class Weighting { uniform, l2_norm };

Weighting parse_weighting(std::string_view name);
std::string_view to_string(Weighting w);

double token_weight(const Eigen::Ref<const DenseVector>& v, Weighting w);

/// 2PR / (P + R), or 0 when P + R == 0.
double harmonic_f(double precision, double recall);

/// Max cosine between `a` and the rows of `b_vectors`.
double vector_indicator(const Eigen::Ref<const DenseVector>& a,
                        const DenseMatrix& b_vectors);

/// Token-matching score with the max-cosine indicator.
ScoreTriple bertscore(const SentenceEmbedding& a, const SentenceEmbedding& b,
                      Weighting w);

/// Token-matching score where each token is scored by its soft membership in
/// the span of the other sentence's token vectors. Denominators run over
/// tokens, not over basis rank.
ScoreTriple subspace_bertscore(const SentenceEmbedding& a,
                               const SentenceEmbedding& b, Weighting w);

/// Cosine between the mean token vectors.
double avg_cos(const SentenceEmbedding& a, const SentenceEmbedding& b);

}  // namespace subspace_sets
