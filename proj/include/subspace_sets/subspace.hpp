#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>

#include "subspace_sets/linalg.hpp"

namespace subspace_sets {

/// Threshold on |σ_i − 1| for a canonical direction to count as shared.
inline constexpr double kDefaultIntersectionAlpha = 1e-6;

/// A linear subspace of ℝ^d stored as an r × d matrix with orthonormal rows.
///
/// Basis order and sign are not canonical: compare subspaces with
/// subspace_equal, which looks at projectors.
class Subspace {
 public:
  /// Rank-0 subspace of ℝ^ambient_dim.
  explicit Subspace(std::size_t ambient_dim);

  /// Adopts `basis`; throws InvalidInput unless its rows are orthonormal
  /// within `tol` (max-abs deviation of the Gram matrix from identity).
  static Subspace from_orthonormal(DenseMatrix basis, double tol = 1e-9);

  const DenseMatrix& basis() const { return basis_; }
  std::size_t rank() const { return static_cast<std::size_t>(basis_.rows()); }
  std::size_t ambient_dim() const {
    return static_cast<std::size_t>(basis_.cols());
  }

  /// d × d orthogonal projector onto the subspace.
  DenseMatrix projector() const;

 private:
  struct Trusted {};
  Subspace(DenseMatrix basis, Trusted) : basis_(std::move(basis)) {}

  friend Subspace span_rows(const DenseMatrix&, double);
  friend Subspace complement(const Subspace&);

  DenseMatrix basis_;
};

/// Span of the rows of `rows`; duplicates and dependent rows are absorbed.
Subspace span_rows(const DenseMatrix& rows,
                   double rel_tol = kDefaultRankTolerance);

/// Span of `vectors`, each of dimension `ambient_dim`. Empty input gives the
/// rank-0 subspace.
Subspace span(std::span<const DenseVector> vectors, std::size_t ambient_dim,
              double rel_tol = kDefaultRankTolerance);

/// Sum space a + b.
Subspace unite(const Subspace& a, const Subspace& b);

/// a ∩ b from the canonical directions whose cosines satisfy |σ − 1| ≤ alpha.
Subspace intersect(const Subspace& a, const Subspace& b,
                   double alpha = kDefaultIntersectionAlpha);

/// Orthogonal complement; rank is ambient_dim − rank.
Subspace complement(const Subspace& a);

/// Cosine of the first canonical angle between v and a, in [0, 1].
/// Exactly 0 for a rank-0 subspace.
double soft_membership(const Eigen::Ref<const DenseVector>& v,
                       const Subspace& a);

/// True iff the unit-normalized v lies within `tol` of a.
bool hard_membership(const Eigen::Ref<const DenseVector>& v, const Subspace& a,
                     double tol);

/// ‖P_a − P_b‖_F ≤ tol.
bool subspace_equal(const Subspace& a, const Subspace& b, double tol);

/// Text form: "subspace <d> <r>" then r lines of d %.17g values.
void write_subspace(std::ostream& out, const Subspace& s);
Subspace read_subspace(std::istream& in);

}  // namespace subspace_sets
