#include "termlq/harness/instances.hpp"

#include <Eigen/QR>

#include "termlq/error.hpp"

namespace termlq::harness {

namespace {

Matrix normal_matrix(Rng& rng, int rows, int cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix out(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) out(i, j) = normal(rng);
  }
  return out;
}

Vector normal_vector(Rng& rng, int size) {
  return normal_matrix(rng, size, 1).col(0);
}

Matrix random_orthogonal(Rng& rng, int dim) {
  Eigen::HouseholderQR<Matrix> qr(normal_matrix(rng, dim, dim));
  return qr.householderQ() * Matrix::Identity(dim, dim);
}

Vector drift_terminal(const ProblemInstance& inst) {
  Vector x = inst.x0;
  for (const auto& a : inst.A) x = a * x;
  return x;
}

}  // namespace

ProblemInstance random_instance(Rng& rng, int state_dim, int input_dim,
                                int horizon) {
  ProblemInstance inst;
  inst.horizon = horizon;
  inst.state_dim = state_dim;
  inst.input_dim = input_dim;
  for (int k = 0; k <= horizon; ++k) {
    inst.A.push_back(normal_matrix(rng, state_dim, state_dim));
    inst.B.push_back(normal_matrix(rng, state_dim, input_dim));
  }
  inst.Q = Matrix::Identity(state_dim, state_dim);
  inst.R = Matrix::Identity(input_dim, input_dim);
  inst.H = Matrix::Identity(state_dim, state_dim);
  inst.x0 = normal_vector(rng, state_dim);
  inst.xi = normal_vector(rng, state_dim);
  return inst;
}

Vector reachable_target(const ProblemInstance& inst, Rng& rng) {
  Vector x = inst.x0;
  for (int k = 0; k <= inst.horizon; ++k) {
    x = inst.A[k] * x + inst.B[k] * normal_vector(rng, inst.input_dim);
  }
  return x;
}

ProblemInstance zero_input_instance(Rng& rng, int state_dim, int input_dim,
                                    int horizon, bool on_drift) {
  ProblemInstance inst = random_instance(rng, state_dim, input_dim, horizon);
  for (auto& b : inst.B) b.setZero();
  inst.xi = drift_terminal(inst);
  if (!on_drift) {
    Vector shift = normal_vector(rng, state_dim);
    inst.xi += shift / std::max(shift.norm(), 1e-3);
  }
  return inst;
}

ProblemInstance rank_deficient_instance(Rng& rng, int state_dim, int input_dim,
                                        int horizon, int reachable_dim,
                                        bool reachable) {
  if (reachable_dim < 0 || reachable_dim >= state_dim) {
    throw Error(ErrorCode::kInvalidArgument,
                "reachable_dim must lie in [0, state_dim)");
  }
  const int n = state_dim;
  const int r = reachable_dim;
  ProblemInstance inst = random_instance(rng, n, input_dim, horizon);
  const Matrix T = random_orthogonal(rng, n);
  for (int k = 0; k <= horizon; ++k) {
    // Block upper triangular in the hidden basis: span(e_1..e_r) invariant.
    Matrix a = normal_matrix(rng, n, n);
    a.bottomLeftCorner(n - r, r).setZero();
    Matrix b = normal_matrix(rng, n, input_dim);
    b.bottomRows(n - r).setZero();
    inst.A[k] = T * a * T.transpose();
    inst.B[k] = T * b;
  }
  inst.xi = reachable_target(inst, rng);
  if (!reachable) {
    Vector w = Vector::Zero(n);
    Vector tail = normal_vector(rng, n - r);
    w.tail(n - r) = tail / std::max(tail.norm(), 1e-3);
    inst.xi += T * w;
  }
  return inst;
}

}  // namespace termlq::harness
