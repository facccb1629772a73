#include "termlq/qlearn/learner.hpp"

#include <sstream>

#include "termlq/error.hpp"

namespace termlq::qlearn {

LearnerProblem learner_view(const ProblemInstance& inst) {
  LearnerProblem p;
  p.horizon = inst.horizon;
  p.state_dim = inst.state_dim;
  p.input_dim = inst.input_dim;
  p.cost = {inst.Q, inst.R, inst.H};
  p.x0 = inst.x0;
  p.xi = inst.xi;
  return p;
}

LambdaSolution lambda_from_qmatrix(const QMatrix& q0, const Vector& x0,
                                   const Vector& xi) {
  const StageExtract e = extract_stage(q0, -Matrix(q0.L33()));
  // A fitted G(0) carries round-off at the scale of the whole kernel; a
  // Gramian that should vanish (no input authority) must not be inverted.
  const double floor =
      kRankTolFactor * static_cast<double>(q0.Lambda.rows()) *
      max_abs(q0.Lambda);
  return solve_terminal_equation(e.Phi, e.G, x0, xi, floor);
}

LearnedSchedule learn(const TransitionOracle& oracle,
                      const LearnerProblem& problem,
                      const LearnOptions& options) {
  const int N = problem.horizon;
  const int n = problem.state_dim;
  if (oracle.state_dim() != n || oracle.input_dim() != problem.input_dim) {
    throw Error(ErrorCode::kInvalidArgument,
                "oracle dimensions do not match the problem");
  }
  LearnedSchedule out;
  out.horizon = N;
  out.stages.resize(N + 1);
  out.K.resize(N + 1);
  out.K1.resize(N + 1);
  out.P.resize(N + 2);
  out.Phi.resize(N + 2);
  out.G.resize(N + 2);
  out.P[N + 1] = problem.cost.H;
  out.Phi[N + 1] = Matrix::Identity(n, n);
  out.G[N + 1] = Matrix::Zero(n, n);

  std::optional<StageCarry> carry;
  for (int k = N; k >= 0; --k) {
    LearnedStage& stage = out.stages[k];
    stage.data = sample_stage_data(oracle, k, options.samples, options.dist,
                                   stage_seed(options.seed, k));
    const Vector gamma = stage_targets(stage.data, problem.cost, N, carry);
    stage.fit = fit_stage(stage.data, gamma);
    const StageExtract e = extract_stage(stage.fit.q, out.G[k + 1]);
    out.K[k] = e.K;
    out.K1[k] = e.K1;
    out.P[k] = e.P;
    out.Phi[k] = e.Phi;
    out.G[k] = e.G;
    carry = StageCarry{e.P, e.Phi, e.G};
  }

  out.lambda = lambda_from_qmatrix(out.qmatrix(0), problem.x0, problem.xi);
  if (!out.lambda.in_range) {
    std::ostringstream msg;
    msg << "learned terminal equation has no solution (residual "
        << out.lambda.residual << ")";
    throw Error(ErrorCode::kNotReachable, msg.str());
  }
  return out;
}

Vector learned_control(const LearnedSchedule& sched, int k, const Vector& x) {
  if (k < 0 || k > sched.horizon) {
    throw Error(ErrorCode::kStageOutOfRange,
                "stage " + std::to_string(k) + " outside 0.." +
                    std::to_string(sched.horizon));
  }
  return sched.K[k] * x + sched.K1[k] * sched.lambda.lambda_star;
}

}  // namespace termlq::qlearn
