#pragma once

#include <optional>

#include "termlq/linalg.hpp"
#include "termlq/qlearn/dataset.hpp"
#include "termlq/qlearn/qmatrix.hpp"

namespace termlq::qlearn {

/// Cost weights; the learner knows these, but not A or B.
struct CostWeights {
  Matrix Q;
  Matrix R;
  Matrix H;
};

/// Learned quantities of stage k+1 that the stage-k targets depend on.
struct StageCarry {
  Matrix P;    // P(k+1)
  Matrix Phi;  // Phi(k+1, N)
  Matrix G;    // G(k+1)
};

struct FitDiagnostics {
  double residual = 0.0;   // |Upsilon nu - gamma|_2
  double condition = 0.0;  // of Upsilon
  int rank = 0;
  int samples = 0;
  int features = 0;
  /// Residual above 1e-6 |gamma|_2: data are not explained by a quadratic.
  bool residual_warning = false;
};

struct StageFit {
  QMatrix q;
  Vector nu;  // pack_upper(q.Lambda)
  FitDiagnostics diagnostics;
};

/// Quantities read off a fitted Q-matrix.
struct StageExtract {
  Matrix K;    // -L22^-1 L21
  Matrix K1;   // -L22^-1 L32'
  Matrix P;    // L11 - L21' L22^-1 L21
  Matrix Phi;  // L31 - L32 L22^-1 L21
  Matrix G;    // G_next + L32 L22^-1 L32'
};

/// Regression targets for one stage.
///
/// The last stage (ds.k == horizon) uses the terminal weight:
///   x'Qx + u'Ru + x+' H x+ + 2 x+' lam.
/// Earlier stages need the carry from the stage after:
///   x'Qx + u'Ru + x+' P x+ + 2 x+' Phi' lam - lam' G lam.
/// Throws Error(kCarryMissing) if an earlier stage has no carry.
Vector stage_targets(const StageDataset& ds, const CostWeights& cost,
                     int horizon, const std::optional<StageCarry>& next);

/// Least-squares fit of the stage kernel. Throws Error(kRankDeficient) if
/// the regressor matrix is not of full column rank.
StageFit fit_stage(const StageDataset& ds, const Vector& gamma);

/// Throws Error(kSingularBlock) unless L22 is positive definite.
StageExtract extract_stage(const QMatrix& q, const Matrix& G_next);

}  // namespace termlq::qlearn
