#pragma once

#include <cstddef>
#include <span>

#include <Eigen/Dense>

namespace subspace_sets {

using DenseVector = Eigen::VectorXd;
/// Row-major so that each row is one embedding vector, contiguous in memory.
using DenseMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Singular values σ_i ≤ rel_tol · σ_max are treated as zero.
inline constexpr double kDefaultRankTolerance = 1e-10;

struct ThinSvd {
  DenseMatrix u;                     // rows × p, orthonormal columns
  Eigen::VectorXd singular_values;   // p, descending, non-negative
  DenseMatrix vt;                    // p × cols, orthonormal rows
};

/// Throws InvalidInput naming `what` if any entry is NaN or infinite.
void require_finite(const DenseMatrix& m, const char* what);
void require_finite(const Eigen::Ref<const DenseVector>& v, const char* what);

/// Orthonormal basis (one vector per row) of the row space of `m`.
///
/// The numerical rank is the number of singular values above
/// rel_tol · σ_max. A zero-row or all-zero input yields a 0 × cols result.
DenseMatrix orthonormal_rows(const DenseMatrix& m,
                             double rel_tol = kDefaultRankTolerance);

/// m = U · diag(σ) · Vt with p = min(rows, cols).
ThinSvd thin_svd(const DenseMatrix& m);

/// Orthogonal projector Bᵀ·B for a basis with orthonormal rows.
DenseMatrix projector_of(const DenseMatrix& basis);

/// Stack vectors as matrix rows. All vectors must have `cols` entries.
DenseMatrix stack_rows(std::span<const DenseVector> vectors, std::size_t cols);

/// Cosine similarity; throws InvalidInput if either vector is zero.
double cosine(const Eigen::Ref<const DenseVector>& a,
              const Eigen::Ref<const DenseVector>& b);

}  // namespace subspace_sets
