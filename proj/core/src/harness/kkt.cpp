#include "termlq/harness/kkt.hpp"

#include <sstream>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "termlq/error.hpp"

namespace termlq::harness {

StackedDynamics stack_dynamics(const ProblemInstance& inst) {
  const int N = inst.horizon;
  const int n = inst.state_dim;
  const int m = inst.input_dim;
  const int cols = m * (N + 1);
  StackedDynamics d;
  d.S.reserve(N + 2);
  d.T.reserve(N + 2);
  d.S.push_back(Matrix::Identity(n, n));
  d.T.push_back(Matrix::Zero(n, cols));
  for (int k = 0; k <= N; ++k) {
    d.S.push_back(inst.A[k] * d.S[k]);
    Matrix t = inst.A[k] * d.T[k];
    t.middleCols(k * m, m) += inst.B[k];
    d.T.push_back(std::move(t));
  }
  return d;
}

namespace {

struct ReducedConstraint {
  Matrix basis;  // orthonormal basis of range(C), n x r
  Matrix C;      // basis' C
  Vector rhs;    // basis' (xi - D x0)
  ConstraintCheck check;
};

ReducedConstraint reduce_constraint(const ProblemInstance& inst,
                                    const StackedDynamics& d) {
  const int N = inst.horizon;
  const Matrix& C = d.T[N + 1];
  const Vector target = inst.xi - d.S[N + 1] * inst.x0;

  Eigen::JacobiSVD<Matrix> svd(C, Eigen::ComputeThinU);
  const Vector& s = svd.singularValues();
  const double threshold = static_cast<double>(std::max(C.rows(), C.cols())) *
                           (s.size() ? s(0) : 0.0) * kRankTolFactor;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > threshold) ++rank;
  }
  ReducedConstraint r;
  r.basis = svd.matrixU().leftCols(rank);
  r.C = r.basis.transpose() * C;
  r.rhs = r.basis.transpose() * target;
  r.check.rank = rank;
  r.check.residual = (target - r.basis * r.rhs).norm();
  r.check.feasible = r.check.residual <= range_tolerance(inst.xi);
  return r;
}

}  // namespace

ConstraintCheck terminal_constraint_feasibility(const ProblemInstance& inst) {
  return reduce_constraint(inst, stack_dynamics(inst)).check;
}

KktSolution kkt_oracle(const ProblemInstance& inst) {
  const int N = inst.horizon;
  const int m = inst.input_dim;
  const int cols = m * (N + 1);
  const StackedDynamics d = stack_dynamics(inst);
  const ReducedConstraint con = reduce_constraint(inst, d);
  if (!con.check.feasible) {
    std::ostringstream msg;
    msg << "terminal constraint inconsistent (residual " << con.check.residual
        << ")";
    throw Error(ErrorCode::kInfeasibleConstraint, msg.str());
  }

  // J(U) = U' M U + 2 c' U + const
  Matrix M = Matrix::Zero(cols, cols);
  Vector c = Vector::Zero(cols);
  for (int k = 0; k <= N; ++k) {
    M.block(k * m, k * m, m, m) += inst.R;
    M += d.T[k].transpose() * inst.Q * d.T[k];
    c += d.T[k].transpose() * inst.Q * d.S[k] * inst.x0;
  }
  M += d.T[N + 1].transpose() * inst.H * d.T[N + 1];
  c += d.T[N + 1].transpose() * inst.H * d.S[N + 1] * inst.x0;
  M = symmetrize(M);

  // Stationarity of J + 2 mu'(C U - r):  M U + C' mu = -c,  C U = r.
  const int r = con.check.rank;
  Matrix kkt = Matrix::Zero(cols + r, cols + r);
  kkt.topLeftCorner(cols, cols) = M;
  kkt.topRightCorner(cols, r) = con.C.transpose();
  kkt.bottomLeftCorner(r, cols) = con.C;
  Vector rhs(cols + r);
  rhs << -c, con.rhs;

  Eigen::FullPivLU<Matrix> lu(kkt);
  if (!lu.isInvertible()) {
    throw Error(ErrorCode::kSingularKkt,
                "KKT matrix is singular (rank " + std::to_string(lu.rank()) +
                    " of " + std::to_string(cols + r) + ")");
  }
  const Vector sol = lu.solve(rhs);

  KktSolution out;
  out.u_stacked = sol.head(cols);
  out.multiplier = con.basis * sol.tail(r);
  out.kkt_residual = (kkt * sol - rhs).cwiseAbs().maxCoeff();
  out.constraint_rank = r;

  double cost = 0.0;
  for (int k = 0; k <= N; ++k) {
    const Vector x = d.S[k] * inst.x0 + d.T[k] * out.u_stacked;
    const Vector u = out.u_stacked.segment(k * m, m);
    cost += x.dot(inst.Q * x) + u.dot(inst.R * u);
  }
  const Vector terminal = d.S[N + 1] * inst.x0 + d.T[N + 1] * out.u_stacked;
  cost += terminal.dot(inst.H * terminal);
  out.cost = cost;
  out.constraint_residual = (terminal - inst.xi).cwiseAbs().maxCoeff();
  return out;
}

}  // namespace termlq::harness
