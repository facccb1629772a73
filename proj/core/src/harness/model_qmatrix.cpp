#include "termlq/harness/model_qmatrix.hpp"

namespace termlq::harness {

qlearn::QMatrix model_qmatrix(const ProblemInstance& inst,
                              const ModelSchedule& sched, int k) {
  const int n = inst.state_dim;
  const int m = inst.input_dim;
  const Matrix& A = inst.A.at(k);
  const Matrix& B = inst.B.at(k);
  const Matrix& P = sched.P[k + 1];
  const Matrix& Phi = sched.Phi[k + 1];

  Matrix L = Matrix::Zero(2 * n + m, 2 * n + m);
  L.block(0, 0, n, n) = inst.Q + A.transpose() * P * A;
  L.block(n, 0, m, n) = B.transpose() * P * A;
  L.block(n, n, m, m) = sched.Gamma[k];
  L.block(n + m, 0, n, n) = Phi * A;
  L.block(n + m, n, n, m) = Phi * B;
  L.block(n + m, n + m, n, n) = -sched.G[k + 1];
  L.block(0, n, n, m) = L.block(n, 0, m, n).transpose();
  L.block(0, n + m, n, n) = L.block(n + m, 0, n, n).transpose();
  L.block(n, n + m, m, n) = L.block(n + m, n, n, m).transpose();
  return qlearn::QMatrix(k, n, m, symmetrize(L));
}

}  // namespace termlq::harness
