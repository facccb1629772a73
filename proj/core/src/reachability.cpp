#include "termlq/reachability.hpp"

namespace termlq {

Matrix transition_product(const ProblemInstance& inst, int from) {
  Matrix out = Matrix::Identity(inst.state_dim, inst.state_dim);
  for (int i = from; i <= inst.horizon; ++i) out = inst.A[i] * out;
  return out;
}

ReachabilityResult check_reachability(const ProblemInstance& inst) {
  const int n = inst.state_dim;
  ReachabilityResult r;
  r.G1 = Matrix::Zero(n, n);
  // tail = A(N)..A(k+1), built right to left.
  Matrix tail = Matrix::Identity(n, n);
  for (int k = inst.horizon; k >= 0; --k) {
    const Matrix tb = tail * inst.B[k];
    r.G1 += tb * tb.transpose();
    tail = tail * inst.A[k];
  }
  r.G1 = symmetrize(r.G1);
  r.drift_terminal = tail * inst.x0;

  const MinNormSolve sol = min_norm_solve(r.G1, inst.xi - r.drift_terminal);
  r.residual = sol.residual;
  r.rank = sol.rank;
  r.reachable = sol.residual <= range_tolerance(inst.xi);
  if (r.reachable) r.zeta = sol.solution;
  return r;
}

}  // namespace termlq
