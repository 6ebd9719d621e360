#pragma once

// Seeded generators and brute-force oracles shared by the unit and
// acceptance tests. Nothing here calls the library's SVD routines.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "subspace_sets/embeddings.hpp"
#include "subspace_sets/linalg.hpp"
#include "subspace_sets/random.hpp"
#include "subspace_sets/retrieval.hpp"
#include "subspace_sets/subspace.hpp"

namespace subspace_sets::testing {

inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box–Muller on top of uniform01 so the stream is the same on every platform.
inline double gaussian(Rng& rng) {
  double u1 = uniform01(rng);
  while (u1 <= 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

inline DenseVector random_vector(Rng& rng, Eigen::Index d) {
  DenseVector v(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = gaussian(rng);
  return v;
}

inline DenseMatrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  DenseMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = gaussian(rng);
  }
  return m;
}

inline DenseVector unit(Eigen::Index d, Eigen::Index i) {
  return DenseVector::Unit(d, i);
}

inline DenseMatrix rows_of(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto d = static_cast<Eigen::Index>(rows.begin()->size());
  DenseMatrix m(n, d);
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (const double x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

// Bᵀ·B by explicit loops.
inline Eigen::MatrixXd loop_projector(const DenseMatrix& basis) {
  const Eigen::Index d = basis.cols();
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index k = 0; k < basis.rows(); ++k) {
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) p(i, j) += basis(k, i) * basis(k, j);
    }
  }
  return p;
}

// ‖P·v̂‖₂ with P from loop_projector.
inline double projector_membership(const DenseVector& v, const DenseMatrix& basis) {
  const DenseVector unit_v = v / v.norm();
  return (loop_projector(basis) * unit_v).norm();
}

// Projector onto the row space of arbitrary (possibly dependent) rows via
// the eigendecomposition of the Gram matrix MᵀM. Eigenvalues carry noise near
// 1e-16·σ_max², so the σ tolerance cannot go much below 1e-8.
inline Eigen::MatrixXd eigen_row_space_projector(const DenseMatrix& rows,
                                                 double rel_tol = 1e-6) {
  const Eigen::Index d = rows.cols();
  const Eigen::MatrixXd gram = rows.transpose() * rows;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  const double top = es.eigenvalues().cwiseAbs().maxCoeff();
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    // eigenvalues of MᵀM are σ², so the σ threshold squares
    if (top > 0 && es.eigenvalues()(i) > rel_tol * rel_tol * top) {
      p += es.eigenvectors().col(i) * es.eigenvectors().col(i).transpose();
    }
  }
  return p;
}

// Projector onto a ∩ b: null space of (I − P_a) + (I − P_b).
inline Eigen::MatrixXd eigen_intersection_projector(const Eigen::MatrixXd& pa,
                                                    const Eigen::MatrixXd& pb,
                                                    double tol = 1e-8) {
  const Eigen::Index d = pa.rows();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es((id - pa) + (id - pb));
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (std::abs(es.eigenvalues()(i)) < tol) {
      p += es.eigenvectors().col(i) * es.eigenvectors().col(i).transpose();
    }
  }
  return p;
}

// span of r Gaussian vectors (rank r almost surely).
inline Subspace random_subspace(Rng& rng, Eigen::Index d, Eigen::Index r) {
  return span_rows(random_matrix(rng, r, d));
}

// A pair of subspaces that share a random `shared`-dimensional part.
struct SubspacePair {
  Subspace a;
  Subspace b;
};

inline SubspacePair random_pair(Rng& rng, Eigen::Index d, Eigen::Index rank_a,
                                Eigen::Index rank_b, Eigen::Index shared) {
  const DenseMatrix common = random_matrix(rng, shared, d);
  DenseMatrix ma(rank_a, d);
  DenseMatrix mb(rank_b, d);
  ma << common, random_matrix(rng, rank_a - shared, d);
  mb << common, random_matrix(rng, rank_b - shared, d);
  return {span_rows(ma), span_rows(mb)};
}

// Word clusters around mutually orthogonal centroids:
// word = normalize(centroid + eps · random unit vector).
struct ClusterFixture {
  EmbeddingTable table{1, EmbeddingFormat::glove_text};
  std::vector<WordSetSpec> sets;
};

inline ClusterFixture make_cluster_fixture(std::uint64_t seed, Eigen::Index dim = 50,
                                           int clusters = 5, int words_per_cluster = 50,
                                           double eps = 0.05, int span_size = 5) {
  Rng rng(seed);
  // Orthonormal centroids from Gram–Schmidt on Gaussian draws.
  std::vector<DenseVector> centroids;
  while (static_cast<int>(centroids.size()) < clusters) {
    DenseVector v = random_vector(rng, dim);
    for (const auto& c : centroids) v -= c.dot(v) * c;
    centroids.push_back(v / v.norm());
  }
  ClusterFixture fx;
  fx.table = EmbeddingTable(static_cast<std::size_t>(dim), EmbeddingFormat::glove_text);
  for (int c = 0; c < clusters; ++c) {
    WordSetSpec spec;
    spec.name = "cluster" + std::to_string(c);
    for (int w = 0; w < words_per_cluster; ++w) {
      DenseVector noise = random_vector(rng, dim);
      noise /= noise.norm();
      DenseVector v = centroids[static_cast<std::size_t>(c)] + eps * noise;
      v /= v.norm();
      const std::string word = "c" + std::to_string(c) + "w" + std::to_string(w);
      fx.table.add(word, v);
      (w < span_size ? spec.span_words : spec.test_words).push_back(word);
    }
    fx.sets.push_back(std::move(spec));
  }
  return fx;
}

}  // namespace subspace_sets::testing
