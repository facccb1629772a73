#include "termlq/trajectory.hpp"

#include <algorithm>

#include "termlq/error.hpp"

namespace termlq {

Policy optimal_policy(const ModelSchedule& sched, const Vector& lambda) {
  return [&sched, lambda](int k, const Vector& x) {
    return optimal_control(sched, lambda, k, x);
  };
}

Policy open_loop_policy(const VectorSeq& inputs) {
  return [inputs](int k, const Vector&) -> Vector {
    if (k < 0 || k >= static_cast<int>(inputs.size())) {
      throw Error(ErrorCode::kStageOutOfRange,
                  "no recorded input for stage " + std::to_string(k));
    }
    return inputs[k];
  };
}

Policy zero_policy(int input_dim) {
  return [input_dim](int, const Vector&) -> Vector {
    return Vector::Zero(input_dim);
  };
}

double trajectory_cost(const ProblemInstance& inst, const VectorSeq& states,
                       const VectorSeq& inputs) {
  double cost = 0.0;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    cost += states[k].dot(inst.Q * states[k]) +
            inputs[k].dot(inst.R * inputs[k]);
  }
  const Vector& terminal = states.back();
  return cost + terminal.dot(inst.H * terminal);
}

Trajectory rollout(const ProblemInstance& inst, const Policy& policy) {
  const int N = inst.horizon;
  Trajectory t;
  t.states.reserve(N + 2);
  t.inputs.reserve(N + 1);
  t.states.push_back(inst.x0);
  for (int k = 0; k <= N; ++k) {
    Vector u = policy(k, t.states[k]);
    if (u.size() != inst.input_dim) {
      throw Error(ErrorCode::kInvalidArgument,
                  "policy returned input of length " +
                      std::to_string(u.size()) + " at stage " +
                      std::to_string(k));
    }
    Vector next = inst.A[k] * t.states[k] + inst.B[k] * u;
    if (!u.allFinite() || !next.allFinite()) {
      throw Error(ErrorCode::kNonFiniteState,
                  "non-finite state after stage " + std::to_string(k));
    }
    t.inputs.push_back(std::move(u));
    t.states.push_back(std::move(next));
  }
  t.cost = trajectory_cost(inst, t.states, t.inputs);
  t.terminal_error = (t.states.back() - inst.xi).cwiseAbs().maxCoeff();
  return t;
}

double replay_error(const ProblemInstance& inst, const Trajectory& traj) {
  double worst = 0.0;
  for (std::size_t k = 0; k < traj.inputs.size(); ++k) {
    const Vector expect = inst.A[k] * traj.states[k] + inst.B[k] * traj.inputs[k];
    worst = std::max(worst, (traj.states[k + 1] - expect).cwiseAbs().maxCoeff());
  }
  return worst;
}

VectorSeq costate_p(const ProblemInstance& inst, const Trajectory& traj,
                    const Vector& lambda) {
  const int N = inst.horizon;
  VectorSeq p(N + 1);
  p[N] = inst.H * traj.states[N + 1] + lambda;
  for (int k = N; k >= 1; --k) {
    p[k - 1] = inst.A[k].transpose() * p[k] + inst.Q * traj.states[k];
  }
  return p;
}

CostateSequence costates(const ProblemInstance& inst,
                         const ModelSchedule& sched, const Trajectory& traj,
                         const Vector& lambda) {
  const int N = inst.horizon;
  CostateSequence out;
  out.p = costate_p(inst, traj, lambda);
  out.eta.resize(N + 1);
  out.eta[N] = lambda;
  for (int k = N; k >= 1; --k) {
    out.eta[k - 1] = sched.Ac[k].transpose() * out.eta[k];
  }
  return out;
}

double costate_residual(const ProblemInstance& inst, const Trajectory& traj,
                        const Vector& lambda) {
  const VectorSeq p = costate_p(inst, traj, lambda);
  double worst = 0.0;
  for (int k = 0; k <= inst.horizon; ++k) {
    const Vector r = inst.R * traj.inputs[k] + inst.B[k].transpose() * p[k];
    worst = std::max(worst, r.cwiseAbs().maxCoeff());
  }
  return worst;
}

double evaluate_augmented_cost(const ProblemInstance& inst,
                               const Trajectory& traj, const Vector& lambda) {
  return trajectory_cost(inst, traj.states, traj.inputs) +
         2.0 * lambda.dot(traj.states.back());
}

}  // namespace termlq
