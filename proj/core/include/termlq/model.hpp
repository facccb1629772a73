#pragma once

#include "termlq/linalg.hpp"
#include "termlq/problem.hpp"

namespace termlq {

/// Output of the backward Riccati pass. P has horizon + 2 entries with
/// P[horizon + 1] = H; Gamma and K have one entry per stage.
struct RiccatiPass {
  MatrixSeq P;
  MatrixSeq Gamma;
  MatrixSeq K;
};

/// Everything the model-based controller needs, per stage.
///
///   Ac[k]  = A(k) + B(k) K(k)
///   Phi[k] = Ac(N) ... Ac(k),  Phi[N + 1] = I
///   G[s]   = sum_{j >= s} Phi[j+1] B(j) Gamma(j)^-1 B(j)' Phi[j+1]',
///            G[N + 1] = 0
///   K1[k]  = -Gamma(k)^-1 B(k)' Phi[k+1]'
struct ModelSchedule {
  int horizon = 0;
  MatrixSeq P;      // N + 2
  MatrixSeq Gamma;  // N + 1
  MatrixSeq K;      // N + 1
  MatrixSeq K1;     // N + 1
  MatrixSeq Ac;     // N + 1
  MatrixSeq Phi;    // N + 2
  MatrixSeq G;      // N + 2
};

/// Solution of Phi(0,N) x0 - G(0) lambda = xi.
struct LambdaSolution {
  Vector lambda_star;
  double residual = 0.0;
  bool in_range = false;
  /// Set when G(0) is rank deficient and the minimum-norm solution was
  /// picked among many.
  bool min_norm = false;
};

/// Throws Error(kSingularGamma) if some Gamma(k) is not positive definite.
RiccatiPass riccati_backward(const ProblemInstance& inst);

ModelSchedule build_schedule(const ProblemInstance& inst,
                             const RiccatiPass& pass);

/// riccati_backward followed by build_schedule.
ModelSchedule solve_schedule(const ProblemInstance& inst);

/// Minimum-norm lambda for Phi0 * x0 - G0 * lambda = xi. Does not throw;
/// check `in_range`. `noise_floor` drops singular values of G0 that are at
/// or below it, on top of the relative rank threshold.
LambdaSolution solve_terminal_equation(const Matrix& phi0, const Matrix& g0,
                                       const Vector& x0, const Vector& xi,
                                       double noise_floor = 0.0);

/// Throws Error(kNotReachable) when the equation has no solution.
LambdaSolution solve_lambda(const ModelSchedule& sched,
                            const ProblemInstance& inst);

/// u = K(k) x + K1(k) lambda. Throws Error(kStageOutOfRange).
Vector optimal_control(const ModelSchedule& sched, const Vector& lambda, int k,
                       const Vector& x);

/// Optimal cost-to-go of the augmented problem from stage s:
/// x' P(s) x + 2 x' Phi(s,N)' lambda - lambda' G(s) lambda, s = 0..N+1.
double q_value(const ModelSchedule& sched, int s, const Vector& x,
               const Vector& lambda);

}  // namespace termlq
