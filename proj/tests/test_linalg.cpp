#include <gtest/gtest.h>

#include <algorithm>
#include <limits>

#include "subspace_sets/errors.hpp"
#include "subspace_sets/linalg.hpp"
#include "test_support.hpp"

namespace ss = subspace_sets;
using ss::testing::rows_of;

namespace {

double gram_deviation(const ss::DenseMatrix& q) {
  if (q.rows() == 0) return 0.0;
  const ss::DenseMatrix g = q * q.transpose();
  return (g - ss::DenseMatrix::Identity(q.rows(), q.rows())).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(OrthonormalRows, AxisScaling) {
  const auto q = ss::orthonormal_rows(rows_of({{2, 0, 0}, {0, 3, 0}}), 1e-10);
  ASSERT_EQ(q.rows(), 2);
  EXPECT_LT((ss::projector_of(q) - rows_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}})).norm(),
            1e-12);
}

TEST(OrthonormalRows, DuplicatesCollapse) {
  const auto q = ss::orthonormal_rows(rows_of({{1, 0}, {2, 0}}), 1e-10);
  ASSERT_EQ(q.rows(), 1);
  EXPECT_NEAR(std::abs(q(0, 0)), 1.0, 1e-15);
  EXPECT_NEAR(q(0, 1), 0.0, 1e-15);
}

TEST(OrthonormalRows, TallRandomIsFullRank) {
  ss::Rng rng(7);
  const auto m = ss::testing::random_matrix(rng, 50, 8);
  const auto q = ss::orthonormal_rows(m);
  ASSERT_EQ(q.rows(), 8);
  EXPECT_LT(gram_deviation(q), 1e-9);
}

TEST(OrthonormalRows, EmptyAndZeroGiveRankZero) {
  EXPECT_EQ(ss::orthonormal_rows(ss::DenseMatrix(0, 4)).rows(), 0);
  EXPECT_EQ(ss::orthonormal_rows(ss::DenseMatrix::Zero(3, 4)).rows(), 0);
  EXPECT_EQ(ss::orthonormal_rows(ss::DenseMatrix::Zero(3, 4)).cols(), 4);
}

TEST(OrthonormalRows, RejectsNonFinite) {
  auto m = rows_of({{1, 0}, {0, 1}});
  m(1, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(ss::orthonormal_rows(m), ss::InvalidInput);
  m(1, 1) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(ss::orthonormal_rows(m), ss::InvalidInput);
}

TEST(OrthonormalRows, RejectsBadTolerance) {
  EXPECT_THROW(ss::orthonormal_rows(rows_of({{1, 0}}), 0.0), ss::InvalidInput);
  EXPECT_THROW(ss::orthonormal_rows(rows_of({{1, 0}}), 1.0), ss::InvalidInput);
}

TEST(OrthonormalRows, RankToleranceIsRelative) {
  // second direction at 1e-12 relative is dropped, at 1e-6 relative kept
  EXPECT_EQ(ss::orthonormal_rows(rows_of({{1e6, 0}, {0, 1e-6}})).rows(), 1);
  EXPECT_EQ(ss::orthonormal_rows(rows_of({{1e-3, 0}, {0, 1e-9}})).rows(), 2);
}

// Property: orthonormal output, row space preserved, for random shapes and
// rank-deficient inputs.
TEST(OrthonormalRows, PropertyRowSpacePreserved) {
  ss::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = static_cast<Eigen::Index>(1 + ss::uniform_below(rng, 12));
    const auto r = static_cast<Eigen::Index>(ss::uniform_below(rng, d + 1));
    const auto n = static_cast<Eigen::Index>(ss::uniform_below(rng, 15));
    // n rows drawn from an r-dimensional subspace
    const ss::DenseMatrix gen = ss::testing::random_matrix(rng, r, d);
    const ss::DenseMatrix coeff = ss::testing::random_matrix(rng, n, r);
    const ss::DenseMatrix m = coeff * gen;
    const auto q = ss::orthonormal_rows(m);
    EXPECT_LE(q.rows(), std::min(n, r));
    EXPECT_LT(gram_deviation(q), 1e-9);
    const auto p = ss::testing::loop_projector(q);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const ss::DenseVector v = m.row(i).transpose();
      EXPECT_LE((v - p * v).norm(), 1e-8 * std::max(v.norm(), 1e-300));
    }
    if (n >= r) {
      EXPECT_EQ(q.rows(), r);
    }
  }
}

TEST(ThinSvd, Diagonal) {
  const auto s = ss::thin_svd(rows_of({{3, 0}, {0, 2}}));
  EXPECT_NEAR(s.singular_values(0), 3.0, 1e-15);
  EXPECT_NEAR(s.singular_values(1), 2.0, 1e-15);
}

TEST(ThinSvd, RowVectorSingularValueIsNorm) {
  const auto s = ss::thin_svd(rows_of({{1, 2, 2, 4}}));
  ASSERT_EQ(s.singular_values.size(), 1);
  EXPECT_NEAR(s.singular_values(0), 5.0, 1e-14);
}

TEST(ThinSvd, RandomReconstruction) {
  ss::Rng rng(3);
  const auto m = ss::testing::random_matrix(rng, 5, 3);
  const auto s = ss::thin_svd(m);
  const ss::DenseMatrix rebuilt = s.u * s.singular_values.asDiagonal() * s.vt;
  EXPECT_LT((rebuilt - m).norm() / m.norm(), 1e-9);
  for (Eigen::Index i = 1; i < s.singular_values.size(); ++i) {
    EXPECT_GE(s.singular_values(i - 1), s.singular_values(i));
    EXPECT_GE(s.singular_values(i), 0.0);
  }
  EXPECT_LT((s.u.transpose() * s.u - ss::DenseMatrix::Identity(3, 3)).norm(), 1e-12);
  EXPECT_LT((s.vt * s.vt.transpose() - ss::DenseMatrix::Identity(3, 3)).norm(), 1e-12);
}

TEST(ThinSvd, RowShuffleInvariance) {
  ss::Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = ss::testing::random_matrix(rng, 6, 4);
    std::vector<Eigen::Index> order{0, 1, 2, 3, 4, 5};
    ss::shuffle(order, rng);
    ss::DenseMatrix shuffled(6, 4);
    for (Eigen::Index i = 0; i < 6; ++i) shuffled.row(i) = m.row(order[i]);
    const auto a = ss::thin_svd(m).singular_values;
    const auto b = ss::thin_svd(shuffled).singular_values;
    EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(ThinSvd, Errors) {
  EXPECT_THROW(ss::thin_svd(ss::DenseMatrix(0, 3)), ss::InvalidInput);
  auto m = rows_of({{1, 2}});
  m(0, 0) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(ss::thin_svd(m), ss::InvalidInput);
}

TEST(ProjectorOf, Examples) {
  EXPECT_EQ(ss::projector_of(rows_of({{1, 0, 0}})),
            rows_of({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(ss::projector_of(ss::DenseMatrix(0, 3)), ss::DenseMatrix::Zero(3, 3));
  EXPECT_EQ(ss::projector_of(rows_of({{1, 0, 0}, {0, 1, 0}})),
            rows_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
}

TEST(ProjectorOf, SymmetricIdempotentTraceIsRank) {
  ss::Rng rng(9);
  const auto q = ss::orthonormal_rows(ss::testing::random_matrix(rng, 4, 10));
  const auto p = ss::projector_of(q);
  EXPECT_LT((p - p.transpose()).norm(), 1e-12);
  EXPECT_LT((p * p - p).norm(), 1e-9);
  EXPECT_NEAR(p.trace(), 4.0, 1e-6);
}

TEST(ProjectorOf, RejectsNonOrthonormal) {
  EXPECT_THROW(ss::projector_of(rows_of({{1, 1, 0}})), ss::InvalidInput);
  EXPECT_THROW(ss::projector_of(rows_of({{1, 0, 0}, {1, 0, 0}})), ss::InvalidInput);
}

TEST(Cosine, ZeroVectorRejected) {
  EXPECT_THROW(ss::cosine(ss::DenseVector::Zero(2), ss::DenseVector::Ones(2)),
               ss::InvalidInput);
  EXPECT_THROW(ss::cosine(ss::DenseVector::Ones(3), ss::DenseVector::Ones(2)),
               ss::DimensionMismatch);
}
