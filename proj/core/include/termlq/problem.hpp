#pragma once

#include <string>
#include <vector>

#include "termlq/linalg.hpp"

namespace termlq {

/// Finite-horizon, time-varying LQ problem with an exact terminal target.
///
/// Stages run k = 0..horizon; the terminal state is x(horizon + 1), which
/// must equal `xi`. `A` and `B` hold one matrix per stage.
struct ProblemInstance {
  int horizon = 0;
  int state_dim = 0;
  int input_dim = 0;
  MatrixSeq A;
  MatrixSeq B;
  Matrix Q;
  Matrix R;
  Matrix H;
  Vector x0;
  Vector xi;

  int stage_count() const { return horizon + 1; }
};

struct ValidationCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool ok() const;
  const ValidationCheck* first_failure() const;
  /// One line per failed check; empty when everything passed.
  std::string failures() const;
};

/// Dimension, symmetry and definiteness checks. Never throws: definiteness
/// checks are skipped (and reported as such) when shapes are already wrong.
ValidationReport validate_instance(const ProblemInstance& inst);

/// Throws Error(kValidationError) naming the first failed check.
void require_valid(const ProblemInstance& inst);

}  // namespace termlq
