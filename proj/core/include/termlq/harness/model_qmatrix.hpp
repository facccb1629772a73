#pragma once

#include "termlq/model.hpp"
#include "termlq/problem.hpp"
#include "termlq/qlearn/qmatrix.hpp"

namespace termlq::harness {

/// Stage-k kernel built from the true dynamics and the model schedule:
///   L11 = Q + A'P(k+1)A, L21 = B'P(k+1)A, L22 = Gamma(k),
///   L31 = Phi(k+1,N) A,  L32 = Phi(k+1,N) B, L33 = -G(k+1).
/// Reads A and B, so it is a verification reference only.
qlearn::QMatrix model_qmatrix(const ProblemInstance& inst,
                              const ModelSchedule& sched, int k);

}  // namespace termlq::harness
