#pragma once

#include <cstdint>
#include <vector>

#include "termlq/linalg.hpp"
#include "termlq/model.hpp"
#include "termlq/qlearn/dataset.hpp"
#include "termlq/qlearn/fit.hpp"
#include "termlq/qlearn/oracle.hpp"

namespace termlq::qlearn {

/// What the learner is told about the problem. A and B are deliberately
/// absent; transitions come from a TransitionOracle.
struct LearnerProblem {
  int horizon = 0;
  int state_dim = 0;
  int input_dim = 0;
  CostWeights cost;
  Vector x0;
  Vector xi;
};

/// Copies everything except the dynamics.
LearnerProblem learner_view(const ProblemInstance& inst);

struct LearnOptions {
  int samples = 0;  // per stage
  GaussianSpec dist;
  std::uint64_t seed = 0;
};

struct LearnedStage {
  StageDataset data;
  StageFit fit;
};

struct LearnedSchedule {
  int horizon = 0;
  std::vector<LearnedStage> stages;  // indexed by k = 0..N
  MatrixSeq K;    // N + 1
  MatrixSeq K1;   // N + 1
  MatrixSeq P;    // N + 2, P[N+1] = H
  MatrixSeq Phi;  // N + 2, Phi[N+1] = I
  MatrixSeq G;    // N + 2, G[N+1] = 0
  LambdaSolution lambda;

  const QMatrix& qmatrix(int k) const { return stages.at(k).fit.q; }
};

/// Minimum-norm lambda read directly off the stage-0 kernel:
///   [-L33 + L32 L22^-1 L32']^+ ([L31 - L32 L22^-1 L21] x0 - xi).
LambdaSolution lambda_from_qmatrix(const QMatrix& q0, const Vector& x0,
                                   const Vector& xi);

/// Backward Q-learning pass over stages N..0, then lambda*. Throws
/// kInsufficientSamples, kRankDeficient, kSingularBlock or kNotReachable.
LearnedSchedule learn(const TransitionOracle& oracle,
                      const LearnerProblem& problem,
                      const LearnOptions& options);

/// u = K(k) x + K1(k) lambda* from the learned gains.
Vector learned_control(const LearnedSchedule& sched, int k, const Vector& x);

}  // namespace termlq::qlearn
