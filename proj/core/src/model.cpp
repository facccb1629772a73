#include "termlq/model.hpp"

#include <sstream>

#include "termlq/error.hpp"

namespace termlq {

RiccatiPass riccati_backward(const ProblemInstance& inst) {
  const int N = inst.horizon;
  const int n = inst.state_dim;
  const int m = inst.input_dim;
  RiccatiPass out;
  out.P.assign(N + 2, Matrix::Zero(n, n));
  out.Gamma.assign(N + 1, Matrix::Zero(m, m));
  out.K.assign(N + 1, Matrix::Zero(m, n));
  out.P[N + 1] = inst.H;

  for (int k = N; k >= 0; --k) {
    const Matrix& A = inst.A[k];
    const Matrix& B = inst.B[k];
    const Matrix& P_next = out.P[k + 1];
    const Matrix BtP = B.transpose() * P_next;
    Matrix gamma = symmetrize(inst.R + BtP * B);
    Eigen::LLT<Matrix> llt(gamma);
    if (llt.info() != Eigen::Success || !is_pd(gamma)) {
      std::ostringstream msg;
      msg << "Gamma(" << k << ") is not positive definite (min eigenvalue "
          << min_eigenvalue(gamma) << ")";
      throw Error(ErrorCode::kSingularGamma, msg.str());
    }
    const Matrix BtPA = BtP * A;
    out.K[k] = -llt.solve(BtPA);
    // A'PA + Q - A'PB Gamma^-1 B'PA, with the last term written through K.
    out.P[k] = symmetrize(A.transpose() * P_next * A + inst.Q +
                          BtPA.transpose() * out.K[k]);
    out.Gamma[k] = std::move(gamma);
  }
  return out;
}

ModelSchedule build_schedule(const ProblemInstance& inst,
                             const RiccatiPass& pass) {
  const int N = inst.horizon;
  const int n = inst.state_dim;
  ModelSchedule s;
  s.horizon = N;
  s.P = pass.P;
  s.Gamma = pass.Gamma;
  s.K = pass.K;
  s.Ac.resize(N + 1);
  s.K1.resize(N + 1);
  s.Phi.assign(N + 2, Matrix::Identity(n, n));
  s.G.assign(N + 2, Matrix::Zero(n, n));

  for (int k = 0; k <= N; ++k) s.Ac[k] = inst.A[k] + inst.B[k] * s.K[k];
  for (int k = N; k >= 0; --k) {
    const Matrix& B = inst.B[k];
    Eigen::LLT<Matrix> llt(s.Gamma[k]);
    if (llt.info() != Eigen::Success) {
      throw Error(ErrorCode::kSingularGamma,
                  "Gamma(" + std::to_string(k) + ") is not positive definite");
    }
    s.Phi[k] = s.Phi[k + 1] * s.Ac[k];
    const Matrix gamma_inv_bt = llt.solve(B.transpose());
    s.K1[k] = -gamma_inv_bt * s.Phi[k + 1].transpose();
    const Matrix phi_b = s.Phi[k + 1] * B;
    s.G[k] = symmetrize(s.G[k + 1] + phi_b * llt.solve(phi_b.transpose()));
  }
  return s;
}

ModelSchedule solve_schedule(const ProblemInstance& inst) {
  return build_schedule(inst, riccati_backward(inst));
}

LambdaSolution solve_terminal_equation(const Matrix& phi0, const Matrix& g0,
                                       const Vector& x0, const Vector& xi,
                                       double noise_floor) {
  // Phi x0 - G lambda = xi  <=>  G lambda = Phi x0 - xi.
  const MinNormSolve sol = min_norm_solve(g0, phi0 * x0 - xi, noise_floor);
  LambdaSolution out;
  out.lambda_star = sol.solution;
  out.residual = sol.residual;
  out.in_range = sol.residual <= range_tolerance(xi);
  out.min_norm = sol.rank < g0.rows();
  return out;
}

LambdaSolution solve_lambda(const ModelSchedule& sched,
                            const ProblemInstance& inst) {
  LambdaSolution sol =
      solve_terminal_equation(sched.Phi[0], sched.G[0], inst.x0, inst.xi);
  if (!sol.in_range) {
    std::ostringstream msg;
    msg << "terminal target not reachable: |Phi(0,N) x0 - G(0) lambda - xi| = "
        << sol.residual << " exceeds " << range_tolerance(inst.xi);
    throw Error(ErrorCode::kNotReachable, msg.str());
  }
  return sol;
}

Vector optimal_control(const ModelSchedule& sched, const Vector& lambda, int k,
                       const Vector& x) {
  if (k < 0 || k > sched.horizon) {
    throw Error(ErrorCode::kStageOutOfRange,
                "stage " + std::to_string(k) + " outside 0.." +
                    std::to_string(sched.horizon));
  }
  return sched.K[k] * x + sched.K1[k] * lambda;
}

double q_value(const ModelSchedule& sched, int s, const Vector& x,
               const Vector& lambda) {
  if (s < 0 || s > sched.horizon + 1) {
    throw Error(ErrorCode::kStageOutOfRange,
                "stage " + std::to_string(s) + " outside 0.." +
                    std::to_string(sched.horizon + 1));
  }
  return x.dot(sched.P[s] * x) + 2.0 * x.dot(sched.Phi[s].transpose() * lambda) -
         lambda.dot(sched.G[s] * lambda);
}

}  // namespace termlq
