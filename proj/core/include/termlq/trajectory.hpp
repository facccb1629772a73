#pragma once

#include <functional>

#include "termlq/linalg.hpp"
#include "termlq/model.hpp"
#include "termlq/problem.hpp"

namespace termlq {

/// Stage-indexed state feedback law u = policy(k, x(k)).
using Policy = std::function<Vector(int k, const Vector& x)>;

struct Trajectory {
  VectorSeq states;  // x(0..N+1)
  VectorSeq inputs;  // u(0..N)
  double cost = 0.0;
  double terminal_error = 0.0;  // |x(N+1) - xi|_inf
};

/// Adjoint sequences of the augmented problem, p(0..N) and eta(0..N).
struct CostateSequence {
  VectorSeq p;
  VectorSeq eta;
};

Policy optimal_policy(const ModelSchedule& sched, const Vector& lambda);
Policy open_loop_policy(const VectorSeq& inputs);
Policy zero_policy(int input_dim);

/// Simulates x(k+1) = A(k) x(k) + B(k) u(k) from x0. Throws
/// Error(kNonFiniteState) when the state leaves the finite doubles.
Trajectory rollout(const ProblemInstance& inst, const Policy& policy);

/// sum_k x'Qx + u'Ru over k = 0..N, plus x(N+1)' H x(N+1).
double trajectory_cost(const ProblemInstance& inst, const VectorSeq& states,
                       const VectorSeq& inputs);

/// Largest |x(k+1) - A(k) x(k) - B(k) u(k)|_inf over the stored sequences.
double replay_error(const ProblemInstance& inst, const Trajectory& traj);

/// p(N) = H x(N+1) + lambda, p(k-1) = A(k)' p(k) + Q x(k).
VectorSeq costate_p(const ProblemInstance& inst, const Trajectory& traj,
                    const Vector& lambda);

/// p from costate_p together with eta(N) = lambda, eta(k-1) = Ac(k)' eta(k).
CostateSequence costates(const ProblemInstance& inst,
                         const ModelSchedule& sched, const Trajectory& traj,
                         const Vector& lambda);

/// max_k |R u(k) + B(k)' p(k)|_inf. Zero at the constrained optimum.
double costate_residual(const ProblemInstance& inst, const Trajectory& traj,
                        const Vector& lambda);

/// J + 2 lambda' x(N+1).
double evaluate_augmented_cost(const ProblemInstance& inst,
                               const Trajectory& traj, const Vector& lambda);

}  // namespace termlq
