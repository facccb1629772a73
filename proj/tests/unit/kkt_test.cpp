#include "termlq/harness/kkt.hpp"

#include <gtest/gtest.h>

#include "../common/fixtures.hpp"
#include "termlq/error.hpp"
#include "termlq/harness/instances.hpp"
#include "termlq/harness/verify.hpp"
#include "termlq/reachability.hpp"
#include "termlq/trajectory.hpp"

namespace termlq::harness {
namespace {

using testing::reference_instance;
using testing::scalar_instance;

TEST(KktOracle, ScalarEqualityQp) {
  const KktSolution s = kkt_oracle(scalar_instance(1.5, 4.0));
  ASSERT_EQ(s.u_stacked.size(), 1);
  EXPECT_NEAR(s.u_stacked(0), 2.5, 1e-14);
  EXPECT_NEAR(s.cost, 6.25, 1e-13);
  EXPECT_LE(s.constraint_residual, 1e-14);
  EXPECT_LE(s.kkt_residual, 1e-13);
}

TEST(KktOracle, ReferenceCostMatchesRiccatiRollout) {
  const ProblemInstance inst = reference_instance();
  const ModelSolution model = solve_model(inst);
  const Trajectory t =
      rollout(inst, optimal_policy(model.schedule, model.lambda.lambda_star));
  const KktSolution s = kkt_oracle(inst);
  EXPECT_LE(std::abs(t.cost - s.cost) / std::max(1.0, s.cost), 1e-8);
  EXPECT_LE(s.constraint_residual, 1e-8);
  // Same scale as lambda*: certified by stationarity, and equal here since
  // the constraint has full row rank.
  const Trajectory kkt_traj = rollout(
      inst, open_loop_policy({s.u_stacked.segment(0, 1),
                              s.u_stacked.segment(1, 1),
                              s.u_stacked.segment(2, 1)}));
  EXPECT_LE(costate_residual(inst, kkt_traj, s.multiplier), 1e-8);
}

TEST(KktOracle, InfeasibleWithoutControlAuthority) {
  ProblemInstance inst = reference_instance();
  for (auto& b : inst.B) b.setZero();
  try {
    kkt_oracle(inst);
    FAIL() << "expected InfeasibleConstraint";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasibleConstraint);
  }
  EXPECT_FALSE(terminal_constraint_feasibility(inst).feasible);
}

TEST(KktOracle, RedundantConstraintRowsStillSolve) {
  Rng rng(4);
  const ProblemInstance inst = rank_deficient_instance(rng, 3, 1, 3, 1, true);
  const KktSolution s = kkt_oracle(inst);
  EXPECT_EQ(s.constraint_rank, 1);
  EXPECT_LE(s.constraint_residual, 1e-8 * std::max(1.0, inst.xi.norm()));
  const ModelSolution model = solve_model(inst);
  EXPECT_TRUE(model.lambda.min_norm);
  const Trajectory t =
      rollout(inst, optimal_policy(model.schedule, model.lambda.lambda_star));
  EXPECT_LE(std::abs(t.cost - s.cost) / std::max(1.0, s.cost), 1e-8);
}

TEST(KktOracle, FeasibilityAgreesWithReachability) {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 2;
    ProblemInstance inst;
    switch (trial % 4) {
      case 0: inst = random_instance(rng, n, 1, trial % 3); break;
      case 1: inst = zero_input_instance(rng, n, 1, 2, trial % 8 == 1); break;
      case 2: inst = rank_deficient_instance(rng, n, 1, 3, 1, true); break;
      default: inst = rank_deficient_instance(rng, n, 1, 3, 1, false); break;
    }
    EXPECT_EQ(check_reachability(inst).reachable,
              terminal_constraint_feasibility(inst).feasible)
        << "trial " << trial;
  }
}

TEST(StackDynamics, MatchesSimulation) {
  const ProblemInstance inst = reference_instance();
  const StackedDynamics d = stack_dynamics(inst);
  const Vector U = (Vector(3) << 0.5, -1, 2).finished();
  Vector x = inst.x0;
  for (int k = 0; k <= 2; ++k) {
    EXPECT_LE((d.S[k] * inst.x0 + d.T[k] * U - x).norm(), 1e-12);
    x = inst.A[k] * x + inst.B[k] * U.segment(k, 1);
  }
  EXPECT_LE((d.S[3] * inst.x0 + d.T[3] * U - x).norm(), 1e-12);
}

}  // namespace
}  // namespace termlq::harness
