#pragma once

#include "termlq/linalg.hpp"
#include "termlq/problem.hpp"

namespace termlq::harness {

/// x(k) = S[k] x0 + T[k] U for the stacked input U = (u(0), ..., u(N)).
struct StackedDynamics {
  MatrixSeq S;  // N + 2 entries, n x n
  MatrixSeq T;  // N + 2 entries, n x m(N+1)
};

StackedDynamics stack_dynamics(const ProblemInstance& inst);

struct KktSolution {
  Vector u_stacked;
  /// mu of J + 2 mu' (x(N+1) - xi); minimum-norm when the terminal
  /// constraint has redundant rows.
  Vector multiplier;
  double cost = 0.0;
  double kkt_residual = 0.0;
  double constraint_residual = 0.0;  // |C U + D x0 - xi|_inf
  int constraint_rank = 0;
};

struct ConstraintCheck {
  bool feasible = false;
  double residual = 0.0;
  int rank = 0;
};

/// Is xi - D x0 in the range of C = T[N+1]?
ConstraintCheck terminal_constraint_feasibility(const ProblemInstance& inst);

/// Dense equality-constrained QP over the stacked inputs, states eliminated.
/// Throws Error(kInfeasibleConstraint) or Error(kSingularKkt).
KktSolution kkt_oracle(const ProblemInstance& inst);

}  // namespace termlq::harness
