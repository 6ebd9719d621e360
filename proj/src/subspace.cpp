#include "subspace_sets/subspace.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "subspace_sets/errors.hpp"
#include "subspace_sets/text.hpp"

namespace subspace_sets {

namespace {

void require_same_dim(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch(a.ambient_dim(), b.ambient_dim());
  }
}

// Returns v / ‖v‖ after checking dimension and non-zero norm.
DenseVector unit_query(const Eigen::Ref<const DenseVector>& v,
                       std::size_t ambient_dim) {
  if (static_cast<std::size_t>(v.size()) != ambient_dim) {
    throw DimensionMismatch(ambient_dim, v.size());
  }
  require_finite(v, "query vector");
  const double n = v.norm();
  if (n == 0.0) {
    throw InvalidInput("membership of the zero vector is undefined");
  }
  return v / n;
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim)
    : basis_(0, static_cast<Eigen::Index>(ambient_dim)) {
  if (ambient_dim == 0) {
    throw InvalidInput("subspace ambient dimension must be positive");
  }
}

Subspace Subspace::from_orthonormal(DenseMatrix basis, double tol) {
  if (basis.cols() < 1) {
    throw InvalidInput("subspace ambient dimension must be positive");
  }
  if (basis.rows() > basis.cols()) {
    throw InvalidInput("subspace rank exceeds ambient dimension");
  }
  require_finite(basis, "subspace basis");
  if (basis.rows() > 0) {
    const DenseMatrix gram = basis * basis.transpose();
    const double off =
        (gram - DenseMatrix::Identity(basis.rows(), basis.rows()))
            .cwiseAbs()
            .maxCoeff();
    if (off > tol) {
      throw InvalidInput("subspace basis rows are not orthonormal");
    }
  }
  return Subspace(std::move(basis), Trusted{});
}

DenseMatrix Subspace::projector() const { return projector_of(basis_); }

Subspace span_rows(const DenseMatrix& rows, double rel_tol) {
  return Subspace(orthonormal_rows(rows, rel_tol), Subspace::Trusted{});
}

Subspace span(std::span<const DenseVector> vectors, std::size_t ambient_dim,
              double rel_tol) {
  if (ambient_dim == 0) {
    throw InvalidInput("subspace ambient dimension must be positive");
  }
  return span_rows(stack_rows(vectors, ambient_dim), rel_tol);
}

Subspace unite(const Subspace& a, const Subspace& b) {
  require_same_dim(a, b);
  DenseMatrix stacked(a.basis().rows() + b.basis().rows(), a.basis().cols());
  stacked << a.basis(), b.basis();
  return span_rows(stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b, double alpha) {
  require_same_dim(a, b);
  if (!(alpha >= 0.0 && alpha < 0.5)) {
    throw InvalidInput("intersection alpha must lie in [0, 0.5)");
  }
  // The smaller basis goes first so that its left singular vectors cover it.
  const Subspace& small = a.rank() <= b.rank() ? a : b;
  const Subspace& large = a.rank() <= b.rank() ? b : a;
  if (small.rank() == 0) {
    return Subspace(a.ambient_dim());
  }

  const DenseMatrix cosines = small.basis() * large.basis().transpose();
  const ThinSvd svd = thin_svd(cosines);

  std::vector<Eigen::Index> shared;
  for (Eigen::Index i = 0; i < svd.singular_values.size(); ++i) {
    if (std::abs(svd.singular_values(i) - 1.0) <= alpha) shared.push_back(i);
  }
  DenseMatrix directions(static_cast<Eigen::Index>(shared.size()),
                         small.basis().cols());
  for (std::size_t i = 0; i < shared.size(); ++i) {
    directions.row(static_cast<Eigen::Index>(i)) =
        svd.u.col(shared[i]).transpose() * small.basis();
  }
  return span_rows(directions);
}

Subspace complement(const Subspace& a) {
  const Eigen::Index d = static_cast<Eigen::Index>(a.ambient_dim());
  const Eigen::Index k = static_cast<Eigen::Index>(a.rank());
  if (k == 0) {
    return Subspace(DenseMatrix::Identity(d, d), Subspace::Trusted{});
  }
  if (k == d) {
    return Subspace(a.ambient_dim());
  }
  // Columns k..d of the full left singular basis of Aᵀ span the null space of A.
  const Eigen::MatrixXd at = a.basis().transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(at, Eigen::ComputeFullU);
  if (svd.info() != Eigen::Success) {
    throw NumericalFailure("complement: SVD did not converge");
  }
  DenseMatrix basis = svd.matrixU().rightCols(d - k).transpose();
  return Subspace(std::move(basis), Subspace::Trusted{});
}

double soft_membership(const Eigen::Ref<const DenseVector>& v,
                       const Subspace& a) {
  const DenseVector unit = unit_query(v, a.ambient_dim());
  if (a.rank() == 0) return 0.0;
  // A·v̂ᵀ is a column vector; its only singular value is its 2-norm.
  return (a.basis() * unit).norm();
}

bool hard_membership(const Eigen::Ref<const DenseVector>& v, const Subspace& a,
                     double tol) {
  if (!(tol > 0.0 && tol < 1.0)) {
    throw InvalidInput("hard_membership tol must lie in (0, 1)");
  }
  const DenseVector unit = unit_query(v, a.ambient_dim());
  if (a.rank() == 0) return false;
  const DenseVector coords = a.basis() * unit;
  const DenseVector residual = unit - a.basis().transpose() * coords;
  return residual.norm() <= tol;
}

bool subspace_equal(const Subspace& a, const Subspace& b, double tol) {
  require_same_dim(a, b);
  return (a.projector() - b.projector()).norm() <= tol;
}

void write_subspace(std::ostream& out, const Subspace& s) {
  out << "subspace " << s.ambient_dim() << ' ' << s.rank() << '\n';
  const DenseMatrix& b = s.basis();
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      if (j > 0) out << ' ';
      out << text::format_g17(b(i, j));
    }
    out << '\n';
  }
}

Subspace read_subspace(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) {
    throw ParseError(1, "empty subspace file");
  }
  ++line_no;
  const auto header = text::split_whitespace(text::chomp(line));
  if (header.size() != 3 || header[0] != "subspace") {
    throw ParseError(line_no, "expected 'subspace <ambient_dim> <rank>'");
  }
  const std::size_t d = text::parse_size(header[1], line_no);
  const std::size_t r = text::parse_size(header[2], line_no);
  if (d == 0) throw ParseError(line_no, "ambient dimension must be positive");
  if (r > d) throw ParseError(line_no, "rank exceeds ambient dimension");

  DenseMatrix basis(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < r; ++i) {
    if (!std::getline(in, line)) {
      throw ParseError(line_no + 1, "missing basis row " + std::to_string(i + 1));
    }
    ++line_no;
    const auto fields = text::split_whitespace(text::chomp(line));
    if (fields.size() != d) {
      throw ParseError(line_no, "expected " + std::to_string(d) +
                                    " values, got " +
                                    std::to_string(fields.size()));
    }
    for (std::size_t j = 0; j < d; ++j) {
      basis(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          text::parse_double(fields[j], line_no);
    }
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!text::split_whitespace(text::chomp(line)).empty()) {
      throw ParseError(line_no, "trailing data after basis rows");
    }
  }
  try {
    return Subspace::from_orthonormal(std::move(basis));
  } catch (const InvalidInput& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace subspace_sets
