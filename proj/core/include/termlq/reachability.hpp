#pragma once

#include <optional>

#include "termlq/linalg.hpp"
#include "termlq/problem.hpp"

namespace termlq {

struct ReachabilityResult {
  bool reachable = false;
  /// sum_k [A(N)..A(k+1)] B(k) B(k)' [A(N)..A(k+1)]'
  Matrix G1;
  /// Minimum-norm solution of G1 zeta = xi - A(N)..A(0) x0, when reachable.
  std::optional<Vector> zeta;
  Vector drift_terminal;  // A(N)..A(0) x0
  double residual = 0.0;
  int rank = 0;
};

/// A(N) A(N-1) ... A(from); identity when from > N.
Matrix transition_product(const ProblemInstance& inst, int from);

ReachabilityResult check_reachability(const ProblemInstance& inst);

}  // namespace termlq
