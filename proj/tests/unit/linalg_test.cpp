#include "termlq/linalg.hpp"

#include <cmath>

#include <gtest/gtest.h>

namespace termlq {
namespace {

TEST(Definiteness, SlackScalesWithEntries) {
  Matrix m = Matrix::Identity(2, 2);
  m(1, 1) = -5e-10;
  EXPECT_TRUE(is_psd(m));
  EXPECT_FALSE(is_pd(m));
  m(1, 1) = -1e-6;
  EXPECT_FALSE(is_psd(m));

  // Same relative perturbation on a large matrix stays PSD.
  Matrix big = 1e6 * Matrix::Identity(2, 2);
  big(1, 1) = -1e-4;
  EXPECT_TRUE(is_psd(big));
}

TEST(Definiteness, ZeroIsPsdButNotPd) {
  EXPECT_TRUE(is_psd(Matrix::Zero(3, 3)));
  EXPECT_FALSE(is_pd(Matrix::Zero(3, 3)));
  EXPECT_DOUBLE_EQ(min_eigenvalue(Matrix::Zero(1, 1)), 0.0);
}

TEST(MinNormSolve, FullRankMatchesDirectSolve) {
  Matrix a(2, 2);
  a << 4, 1, 1, 3;
  const Vector b = Vector::Ones(2);
  const MinNormSolve s = min_norm_solve(a, b);
  EXPECT_EQ(s.rank, 2);
  EXPECT_LT((s.solution - a.partialPivLu().solve(b)).norm(), 1e-14);
  EXPECT_LT(s.residual, 1e-14);
}

TEST(MinNormSolve, RankDeficientPicksMinimumNorm) {
  // x + y = 2 has min-norm solution (1, 1).
  Matrix a(2, 2);
  a << 1, 1, 1, 1;
  const MinNormSolve s = min_norm_solve(a, Vector::Constant(2, 2.0));
  EXPECT_EQ(s.rank, 1);
  EXPECT_NEAR(s.solution(0), 1.0, 1e-14);
  EXPECT_NEAR(s.solution(1), 1.0, 1e-14);
  EXPECT_LT(s.residual, 1e-14);

  // Inconsistent right-hand side leaves a residual.
  const MinNormSolve bad = min_norm_solve(a, (Vector(2) << 1, -1).finished());
  EXPECT_NEAR(bad.residual, std::sqrt(2.0), 1e-14);
}

TEST(MinNormSolve, ZeroMatrix) {
  const MinNormSolve s = min_norm_solve(Matrix::Zero(2, 2), Vector::Ones(2));
  EXPECT_EQ(s.rank, 0);
  EXPECT_TRUE(s.solution.isZero());
  EXPECT_NEAR(s.residual, std::sqrt(2.0), 1e-15);
}

TEST(PseudoInverse, PenroseConditions) {
  Matrix a(3, 2);
  a << 1, 2, 2, 4, 0, 0;
  const Matrix p = pseudo_inverse(a);
  EXPECT_LT((a * p * a - a).norm(), 1e-12);
  EXPECT_LT((p * a * p - p).norm(), 1e-12);
  EXPECT_LT(((a * p).transpose() - a * p).norm(), 1e-12);
  EXPECT_EQ(numerical_rank(a), 1);
  EXPECT_TRUE(std::isinf(condition_number(a)));
}

TEST(RangeTolerance, RelativeAboveUnitNorm) {
  EXPECT_DOUBLE_EQ(range_tolerance(Vector::Zero(2)), 1e-6);
  EXPECT_DOUBLE_EQ(range_tolerance((Vector(2) << 3, 4).finished()), 5e-6);
}

}  // namespace
}  // namespace termlq
