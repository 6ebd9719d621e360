#include "subspace_sets/linalg.hpp"

#include <cmath>
#include <string>

#include "subspace_sets/errors.hpp"

namespace subspace_sets {

namespace {

constexpr double kOrthonormalityTolerance = 1e-8;

}  // namespace

void require_finite(const DenseMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw InvalidInput(std::string(what) + " has non-finite entries");
  }
}

void require_finite(const Eigen::Ref<const DenseVector>& v, const char* what) {
  if (!v.allFinite()) {
    throw InvalidInput(std::string(what) + " has non-finite entries");
  }
}

DenseMatrix orthonormal_rows(const DenseMatrix& m, double rel_tol) {
  if (m.cols() < 1) {
    throw InvalidInput("orthonormal_rows: matrix needs at least one column");
  }
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw InvalidInput("orthonormal_rows: rel_tol must lie in (0, 1)");
  }
  require_finite(m, "orthonormal_rows input");
  if (m.rows() == 0) {
    return DenseMatrix(0, m.cols());
  }

  Eigen::JacobiSVD<DenseMatrix> svd(m, Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) {
    throw NumericalFailure("orthonormal_rows: SVD did not converge");
  }
  const auto& sigma = svd.singularValues();
  const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
  Eigen::Index rank = 0;
  if (sigma_max > 0.0) {
    while (rank < sigma.size() && sigma(rank) > rel_tol * sigma_max) {
      ++rank;
    }
  }
  return svd.matrixV().leftCols(rank).transpose();
}

ThinSvd thin_svd(const DenseMatrix& m) {
  if (m.rows() < 1 || m.cols() < 1) {
    throw InvalidInput("thin_svd: matrix must be non-empty");
  }
  require_finite(m, "thin_svd input");
  Eigen::JacobiSVD<DenseMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) {
    throw NumericalFailure("thin_svd: SVD did not converge");
  }
  return ThinSvd{svd.matrixU(), svd.singularValues(),
                 svd.matrixV().transpose()};
}

DenseMatrix projector_of(const DenseMatrix& basis) {
  const Eigen::Index d = basis.cols();
  if (basis.rows() == 0) {
    return DenseMatrix::Zero(d, d);
  }
  require_finite(basis, "projector_of basis");
  const DenseMatrix gram = basis * basis.transpose();
  const double off =
      (gram - DenseMatrix::Identity(basis.rows(), basis.rows()))
          .cwiseAbs()
          .maxCoeff();
  if (off > kOrthonormalityTolerance) {
    throw InvalidInput("projector_of: basis rows are not orthonormal");
  }
  return basis.transpose() * basis;
}

DenseMatrix stack_rows(std::span<const DenseVector> vectors, std::size_t cols) {
  DenseMatrix out(static_cast<Eigen::Index>(vectors.size()),
                  static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (static_cast<std::size_t>(vectors[i].size()) != cols) {
      throw DimensionMismatch(cols, vectors[i].size());
    }
    out.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  }
  return out;
}

double cosine(const Eigen::Ref<const DenseVector>& a,
              const Eigen::Ref<const DenseVector>& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch(a.size(), b.size());
  }
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) {
    throw InvalidInput("cosine of a zero vector is undefined");
  }
  return a.dot(b) / (na * nb);
}

}  // namespace subspace_sets
