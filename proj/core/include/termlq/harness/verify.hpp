#pragma once

#include <optional>
#include <vector>

#include "termlq/linalg.hpp"
#include "termlq/model.hpp"
#include "termlq/problem.hpp"
#include "termlq/qlearn/learner.hpp"

namespace termlq::harness {

struct ModelSolution {
  ModelSchedule schedule;
  LambdaSolution lambda;
};

/// Model-based pipeline: Riccati pass, schedule, lambda*.
ModelSolution solve_model(const ProblemInstance& inst);

/// The parts of a controller two implementations can be compared on.
struct ControllerGains {
  MatrixSeq K;
  MatrixSeq K1;
  MatrixSeq P;  // P(0..N)
  Vector lambda;
};

ControllerGains gains_of(const ModelSolution& model);
ControllerGains gains_of(const qlearn::LearnedSchedule& learned);

/// max |a - b| over all entries of matching sequences.
double max_entry_error(const MatrixSeq& a, const MatrixSeq& b);

struct GainComparison {
  double K = 0.0;
  double K1 = 0.0;
  double P = 0.0;
  double lambda = 0.0;

  double max_gain() const;
};

GainComparison compare_gains(const ControllerGains& a,
                             const ControllerGains& b);

struct ComparisonReport {
  // Learned vs model; absent without a learned schedule.
  std::optional<double> max_gain_error;
  std::optional<double> lambda_error;
  std::optional<double> learned_cost_gap;  // relative
  // Model vs KKT oracle.
  double cost_gap = 0.0;   // |J - J_kkt| / max(1, |J_kkt|)
  double input_gap = 0.0;  // max |u - u_kkt|
  double model_stationarity = 0.0;
  double oracle_stationarity = 0.0;
  // |x(N+1) - xi|_inf for the model and the learned controller.
  std::pair<double, std::optional<double>> terminal_errors;
  double model_cost = 0.0;
  double oracle_cost = 0.0;
  std::optional<double> learned_cost;
  std::vector<double> per_stage_condition;  // learned regressors, k = 0..N
};

ComparisonReport verify_solution(const ProblemInstance& inst,
                                 const ModelSolution& model,
                                 const qlearn::LearnedSchedule* learned);

}  // namespace termlq::harness
