#include "termlq/harness/verify.hpp"

#include <algorithm>
#include <cmath>

#include "termlq/error.hpp"
#include "termlq/harness/kkt.hpp"
#include "termlq/trajectory.hpp"

namespace termlq::harness {

ModelSolution solve_model(const ProblemInstance& inst) {
  ModelSolution out;
  out.schedule = solve_schedule(inst);
  out.lambda = solve_lambda(out.schedule, inst);
  return out;
}

ControllerGains gains_of(const ModelSolution& model) {
  const auto& s = model.schedule;
  return {s.K, s.K1, MatrixSeq(s.P.begin(), s.P.end() - 1),
          model.lambda.lambda_star};
}

ControllerGains gains_of(const qlearn::LearnedSchedule& learned) {
  return {learned.K, learned.K1,
          MatrixSeq(learned.P.begin(), learned.P.end() - 1),
          learned.lambda.lambda_star};
}

double max_entry_error(const MatrixSeq& a, const MatrixSeq& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kInvalidArgument, "sequence lengths differ");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, max_abs(a[i] - b[i]));
  }
  return worst;
}

double GainComparison::max_gain() const { return std::max({K, K1, P}); }

GainComparison compare_gains(const ControllerGains& a,
                             const ControllerGains& b) {
  GainComparison c;
  c.K = max_entry_error(a.K, b.K);
  c.K1 = max_entry_error(a.K1, b.K1);
  c.P = max_entry_error(a.P, b.P);
  c.lambda = max_abs(a.lambda - b.lambda);
  return c;
}

namespace {

double relative_gap(double value, double reference) {
  return std::abs(value - reference) / std::max(1.0, std::abs(reference));
}

Vector stack(const VectorSeq& inputs) {
  Eigen::Index total = 0;
  for (const auto& u : inputs) total += u.size();
  Vector out(total);
  Eigen::Index at = 0;
  for (const auto& u : inputs) {
    out.segment(at, u.size()) = u;
    at += u.size();
  }
  return out;
}

}  // namespace

ComparisonReport verify_solution(const ProblemInstance& inst,
                                 const ModelSolution& model,
                                 const qlearn::LearnedSchedule* learned) {
  ComparisonReport r;
  const Vector& lambda = model.lambda.lambda_star;
  const Trajectory model_traj =
      rollout(inst, optimal_policy(model.schedule, lambda));
  r.model_cost = model_traj.cost;
  r.terminal_errors.first = model_traj.terminal_error;
  r.model_stationarity = costate_residual(inst, model_traj, lambda);

  const KktSolution kkt = kkt_oracle(inst);
  r.oracle_cost = kkt.cost;
  r.cost_gap = relative_gap(model_traj.cost, kkt.cost);
  r.input_gap = max_abs(stack(model_traj.inputs) - kkt.u_stacked);
  VectorSeq kkt_inputs;
  for (int k = 0; k <= inst.horizon; ++k) {
    kkt_inputs.push_back(
        kkt.u_stacked.segment(k * inst.input_dim, inst.input_dim));
  }
  const Trajectory kkt_traj = rollout(inst, open_loop_policy(kkt_inputs));
  r.oracle_stationarity = costate_residual(inst, kkt_traj, kkt.multiplier);

  if (learned != nullptr) {
    const GainComparison g = compare_gains(gains_of(*learned), gains_of(model));
    r.max_gain_error = g.max_gain();
    r.lambda_error = g.lambda;
    const Trajectory learned_traj =
        rollout(inst, [learned](int k, const Vector& x) {
          return qlearn::learned_control(*learned, k, x);
        });
    r.learned_cost = learned_traj.cost;
    r.learned_cost_gap = relative_gap(learned_traj.cost, model_traj.cost);
    r.terminal_errors.second = learned_traj.terminal_error;
    for (const auto& stage : learned->stages) {
      r.per_stage_condition.push_back(stage.fit.diagnostics.condition);
    }
  }
  return r;
}

}  // namespace termlq::harness
