#include "termlq/qlearn/fit.hpp"

#include <sstream>

#include <Eigen/QR>

#include "termlq/error.hpp"

namespace termlq::qlearn {

Vector stage_targets(const StageDataset& ds, const CostWeights& cost,
                     int horizon, const std::optional<StageCarry>& next) {
  const bool terminal = ds.k == horizon;
  if (!terminal && !next) {
    throw Error(ErrorCode::kCarryMissing,
                "stage " + std::to_string(ds.k) +
                    " needs the fitted quantities of stage " +
                    std::to_string(ds.k + 1));
  }
  Vector gamma(ds.samples.size());
  for (std::size_t i = 0; i < ds.samples.size(); ++i) {
    const TransitionSample& s = ds.samples[i];
    double g = s.x.dot(cost.Q * s.x) + s.u.dot(cost.R * s.u);
    if (terminal) {
      g += s.x_next.dot(cost.H * s.x_next) + 2.0 * s.x_next.dot(s.lam);
    } else {
      g += s.x_next.dot(next->P * s.x_next) +
           2.0 * s.x_next.dot(next->Phi.transpose() * s.lam) -
           s.lam.dot(next->G * s.lam);
    }
    gamma(static_cast<Eigen::Index>(i)) = g;
  }
  return gamma;
}

StageFit fit_stage(const StageDataset& ds, const Vector& gamma) {
  const int features = ds.feature_dim();
  const int rows = static_cast<int>(ds.samples.size());
  if (gamma.size() != rows) {
    throw Error(ErrorCode::kInvalidArgument,
                "target length does not match sample count");
  }
  Matrix upsilon(rows, features);
  for (int i = 0; i < rows; ++i) {
    upsilon.row(i) = regressor_row(ds.samples[i].z()).transpose();
  }

  FitDiagnostics diag;
  diag.samples = rows;
  diag.features = features;
  diag.rank = numerical_rank(upsilon);
  diag.condition = condition_number(upsilon);
  if (diag.rank < features) {
    std::ostringstream msg;
    msg << "stage " << ds.k << ": regressor rank " << diag.rank << " < "
        << features << " (samples " << rows << ", condition " << diag.condition
        << ")";
    throw Error(ErrorCode::kRankDeficient, msg.str());
  }

  Eigen::ColPivHouseholderQR<Matrix> qr(upsilon);
  Vector nu = qr.solve(gamma);
  diag.residual = (upsilon * nu - gamma).norm();
  diag.residual_warning = diag.residual > 1e-6 * gamma.norm();

  StageFit fit;
  fit.q = QMatrix(ds.k, ds.state_dim, ds.input_dim,
                  unpack_upper(nu, ds.z_dim()));
  fit.nu = std::move(nu);
  fit.diagnostics = diag;
  return fit;
}

StageExtract extract_stage(const QMatrix& q, const Matrix& G_next) {
  const Matrix l22 = q.L22();
  Eigen::LLT<Matrix> llt(symmetrize(l22));
  if (llt.info() != Eigen::Success || !is_pd(l22)) {
    std::ostringstream msg;
    msg << "stage " << q.k << ": input block not positive definite (min "
        << "eigenvalue " << min_eigenvalue(l22) << ")";
    throw Error(ErrorCode::kSingularBlock, msg.str());
  }
  const Matrix l21 = q.L21();
  const Matrix l32 = q.L32();
  StageExtract e;
  e.K = -llt.solve(l21);
  e.K1 = -llt.solve(l32.transpose());
  e.P = symmetrize(q.L11() + l21.transpose() * e.K);
  e.Phi = q.L31() + l32 * e.K;
  e.G = symmetrize(G_next - l32 * e.K1);
  return e;
}

}  // namespace termlq::qlearn
