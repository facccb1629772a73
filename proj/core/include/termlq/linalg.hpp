#pragma once

#include <vector>

#include <Eigen/Dense>

namespace termlq {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using MatrixSeq = std::vector<Matrix>;
using VectorSeq = std::vector<Vector>;

// Eigenvalue slack for definiteness tests, scaled by max(1, max|entry|).
inline constexpr double kPsdTol = 1e-9;
// Singular values below max(rows, cols) * sigma_max * kRankTolFactor are
// treated as zero.
inline constexpr double kRankTolFactor = 1e-12;
// A linear equation is "consistent" when its residual is at most
// kRangeTolFactor * max(1, |target|_2).
inline constexpr double kRangeTolFactor = 1e-6;

double max_abs(const Matrix& m);
Matrix symmetrize(const Matrix& m);
double asymmetry(const Matrix& m);

/// Smallest eigenvalue of the symmetric part of a square matrix.
double min_eigenvalue(const Matrix& m);

double definiteness_tolerance(const Matrix& m);
bool is_psd(const Matrix& m);
bool is_pd(const Matrix& m);

double range_tolerance(const Vector& target);

struct MinNormSolve {
  Vector solution;
  double residual = 0.0;  // |a * solution - b|_2
  int rank = 0;
  double sigma_max = 0.0;
  double rank_threshold = 0.0;
};

/// Minimum-norm least-squares solution of a * x = b through a truncated SVD.
/// Singular values at or below max(rank threshold, abs_floor) are dropped.
MinNormSolve min_norm_solve(const Matrix& a, const Vector& b,
                            double abs_floor = 0.0);

Matrix pseudo_inverse(const Matrix& a);
int numerical_rank(const Matrix& a);

/// sigma_max / sigma_min; infinity when the matrix is rank deficient at the
/// truncation threshold.
double condition_number(const Matrix& a);

}  // namespace termlq
