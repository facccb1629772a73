#include "termlq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace termlq {

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Matrix symmetrize(const Matrix& m) { return 0.5 * (m + m.transpose()); }

double asymmetry(const Matrix& m) {
  return m.size() == 0 ? 0.0 : (m - m.transpose()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(symmetrize(m),
                                            Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

double definiteness_tolerance(const Matrix& m) {
  return kPsdTol * std::max(1.0, max_abs(m));
}

bool is_psd(const Matrix& m) {
  return min_eigenvalue(m) >= -definiteness_tolerance(m);
}

bool is_pd(const Matrix& m) {
  return m.size() > 0 && min_eigenvalue(m) > definiteness_tolerance(m);
}

double range_tolerance(const Vector& target) {
  return kRangeTolFactor * std::max(1.0, target.norm());
}

namespace {

struct TruncatedSvd {
  Eigen::JacobiSVD<Matrix> svd;
  int rank = 0;
  double threshold = 0.0;
};

TruncatedSvd truncated_svd(const Matrix& a) {
  TruncatedSvd t{Eigen::JacobiSVD<Matrix>(
      a, Eigen::ComputeThinU | Eigen::ComputeThinV)};
  const Vector& s = t.svd.singularValues();
  const double sigma_max = s.size() > 0 ? s(0) : 0.0;
  t.threshold = static_cast<double>(std::max(a.rows(), a.cols())) *
                sigma_max * kRankTolFactor;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > t.threshold) ++t.rank;
  }
  return t;
}

}  // namespace

MinNormSolve min_norm_solve(const Matrix& a, const Vector& b,
                            double abs_floor) {
  MinNormSolve out;
  out.solution = Vector::Zero(a.cols());
  if (a.size() == 0) {
    out.residual = b.norm();
    return out;
  }
  TruncatedSvd t = truncated_svd(a);
  const auto& svd = t.svd;
  if (abs_floor > t.threshold) {
    t.threshold = abs_floor;
    t.rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
      if (svd.singularValues()(i) > abs_floor) ++t.rank;
    }
  }
  out.rank = t.rank;
  out.sigma_max = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  out.rank_threshold = t.threshold;
  if (t.rank > 0) {
    const Matrix u = svd.matrixU().leftCols(t.rank);
    const Matrix v = svd.matrixV().leftCols(t.rank);
    const Vector coeffs = (u.transpose() * b).cwiseQuotient(
        svd.singularValues().head(t.rank));
    out.solution = v * coeffs;
  }
  out.residual = (a * out.solution - b).norm();
  return out;
}

Matrix pseudo_inverse(const Matrix& a) {
  if (a.size() == 0) return Matrix::Zero(a.cols(), a.rows());
  const TruncatedSvd t = truncated_svd(a);
  const auto& svd = t.svd;
  Matrix out = Matrix::Zero(a.cols(), a.rows());
  for (int i = 0; i < t.rank; ++i) {
    out += svd.matrixV().col(i) * (1.0 / svd.singularValues()(i)) *
           svd.matrixU().col(i).transpose();
  }
  return out;
}

int numerical_rank(const Matrix& a) {
  return a.size() == 0 ? 0 : truncated_svd(a).rank;
}

double condition_number(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  const TruncatedSvd t = truncated_svd(a);
  const Vector& s = t.svd.singularValues();
  if (t.rank < std::min(a.rows(), a.cols())) {
    return std::numeric_limits<double>::infinity();
  }
  return s(0) / s(s.size() - 1);
}

}  // namespace termlq
