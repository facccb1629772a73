#include "run.hpp"

#include <exception>
#include <memory>

#include "instance_file.hpp"
#include "replay_file.hpp"
#include "termlq/harness/campaign.hpp"
#include "termlq/harness/verify.hpp"
#include "termlq/qlearn/learner.hpp"
#include "termlq/reachability.hpp"
#include "termlq/trajectory.hpp"

namespace termlq::cli {

using nlohmann::ordered_json;

std::optional<Command> parse_command(const std::string& name) {
  if (name == "solve") return Command::kSolve;
  if (name == "learn") return Command::kLearn;
  if (name == "verify") return Command::kVerify;
  if (name == "reach") return Command::kReach;
  if (name == "campaign") return Command::kCampaign;
  return std::nullopt;
}

const char* to_string(Command command) {
  switch (command) {
    case Command::kSolve: return "solve";
    case Command::kLearn: return "learn";
    case Command::kVerify: return "verify";
    case Command::kReach: return "reach";
    case Command::kCampaign: return "campaign";
  }
  return "?";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kValidationError:
    case ErrorCode::kSingularGamma:
    case ErrorCode::kStageOutOfRange:
      return kExitValidation;
    case ErrorCode::kNotReachable:
    case ErrorCode::kInfeasibleConstraint:
      return kExitNotReachable;
    case ErrorCode::kInsufficientSamples:
    case ErrorCode::kRankDeficient:
    case ErrorCode::kSingularBlock:
    case ErrorCode::kOracleMiss:
    case ErrorCode::kCarryMissing:
      return kExitData;
    case ErrorCode::kParseError:
    case ErrorCode::kIoError:
      return kExitIo;
    case ErrorCode::kNonFiniteState:
    case ErrorCode::kSingularKkt:
      return kExitFailure;
  }
  return kExitFailure;
}

namespace {

ordered_json optional_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json trajectory_json(const Trajectory& t) {
  ordered_json j;
  j["states"] = to_json(t.states);
  j["inputs"] = to_json(t.inputs);
  return j;
}

ordered_json schedule_json(const MatrixSeq& P, const MatrixSeq& K,
                           const MatrixSeq& K1) {
  ordered_json stages = ordered_json::array();
  for (std::size_t k = 0; k < K.size(); ++k) {
    ordered_json s;
    s["k"] = k;
    s["P"] = to_json(P[k]);
    s["K"] = to_json(K[k]);
    s["K1"] = to_json(K1[k]);
    stages.push_back(std::move(s));
  }
  ordered_json j;
  j["stages"] = std::move(stages);
  j["P_terminal"] = to_json(P.back());
  return j;
}

// Shared tail of solve and learn reports.
void add_solution(ordered_json& j, const MatrixSeq& P, const MatrixSeq& K,
                  const MatrixSeq& K1, const LambdaSolution& lambda,
                  const Trajectory& t) {
  j["schedule"] = schedule_json(P, K, K1);
  j["lambda_star"] = to_json(lambda.lambda_star);
  j["lambda_min_norm"] = lambda.min_norm;
  j["trajectory"] = trajectory_json(t);
  j["cost"] = t.cost;
  j["terminal_error"] = t.terminal_error;
}

ordered_json solve_section(const ProblemInstance& inst,
                           const harness::ModelSolution& model) {
  const Trajectory t = rollout(
      inst, optimal_policy(model.schedule, model.lambda.lambda_star));
  ordered_json j;
  add_solution(j, model.schedule.P, model.schedule.K, model.schedule.K1,
               model.lambda, t);
  return j;
}

ordered_json learn_section(const ProblemInstance& inst,
                           const qlearn::LearnedSchedule& L, int samples) {
  const Trajectory t = rollout(inst, [&L](int k, const Vector& x) {
    return qlearn::learned_control(L, k, x);
  });
  ordered_json j;
  add_solution(j, L.P, L.K, L.K1, L.lambda, t);
  ordered_json stages = ordered_json::array();
  for (const auto& st : L.stages) {
    ordered_json s;
    s["k"] = st.data.k;
    s["nu"] = to_json(st.fit.nu);
    s["residual"] = st.fit.diagnostics.residual;
    s["condition"] = st.fit.diagnostics.condition;
    s["rank"] = st.fit.diagnostics.rank;
    s["residual_warning"] = st.fit.diagnostics.residual_warning;
    stages.push_back(std::move(s));
  }
  ordered_json learning;
  learning["samples"] = samples;
  learning["stages"] = std::move(stages);
  j["learning"] = std::move(learning);
  return j;
}

ordered_json comparison_json(const harness::ComparisonReport& r) {
  ordered_json j;
  j["max_gain_error"] = optional_number(r.max_gain_error);
  j["lambda_error"] = optional_number(r.lambda_error);
  j["learned_cost_gap"] = optional_number(r.learned_cost_gap);
  j["cost_gap"] = r.cost_gap;
  j["input_gap"] = r.input_gap;
  j["model_stationarity"] = r.model_stationarity;
  j["oracle_stationarity"] = r.oracle_stationarity;
  j["model_terminal_error"] = r.terminal_errors.first;
  j["learned_terminal_error"] = optional_number(r.terminal_errors.second);
  j["model_cost"] = r.model_cost;
  j["oracle_cost"] = r.oracle_cost;
  j["learned_cost"] = optional_number(r.learned_cost);
  ordered_json cond = ordered_json::array();
  for (double c : r.per_stage_condition) cond.push_back(c);
  j["per_stage_condition"] = std::move(cond);
  return j;
}

ordered_json distribution_json(const harness::Distribution& d) {
  ordered_json j;
  j["count"] = d.count;
  j["max"] = d.max;
  j["median"] = d.median;
  j["p95"] = d.p95;
  return j;
}

ordered_json campaign_json(const harness::CampaignSpec& spec,
                           const harness::CampaignSummary& s) {
  ordered_json j;
  ordered_json sp;
  sp["state_dim"] = {spec.min_state_dim, spec.max_state_dim};
  sp["input_dim"] = {spec.min_input_dim, spec.max_input_dim};
  sp["horizon"] = {spec.min_horizon, spec.max_horizon};
  sp["extra_samples"] = spec.extra_samples;
  sp["run_learner"] = spec.run_learner;
  j["spec"] = std::move(sp);
  j["trials"] = s.trials;
  j["reachable"] = s.reachable;
  j["unreachable"] = s.unreachable;
  j["reach_disagreements"] = s.reach_disagreements;
  ordered_json failures = ordered_json::object();
  for (const auto& [code, count] : s.failures) failures[code] = count;
  j["failures"] = std::move(failures);
  j["gain_error"] = distribution_json(s.gain_error);
  j["lambda_error"] = distribution_json(s.lambda_error);
  j["cost_gap"] = distribution_json(s.cost_gap);
  j["input_gap"] = distribution_json(s.input_gap);
  j["model_terminal_error"] = distribution_json(s.model_terminal_error);
  j["learned_terminal_error"] = distribution_json(s.learned_terminal_error);
  j["stationarity"] = distribution_json(s.stationarity);
  j["regressor_condition"] = distribution_json(s.regressor_condition);
  return j;
}

std::uint64_t require_seed(const RunOptions& opt,
                           const std::optional<std::uint64_t>& fallback,
                           const char* command) {
  if (opt.seed) return *opt.seed;
  if (fallback) return *fallback;
  throw Error(ErrorCode::kInvalidArgument,
              std::string(command) + " requires --seed (no default seed)");
}

struct LearnRun {
  qlearn::LearnedSchedule schedule;
  int samples = 0;
};

LearnRun run_learner(const InstanceFile& file, const RunOptions& opt,
                     std::uint64_t seed) {
  const ProblemInstance& inst = file.instance;
  const int n = inst.state_dim, m = inst.input_dim;
  const int z = 2 * n + m;

  qlearn::LearnOptions lo;
  lo.samples = opt.samples.value_or(
      file.learn.samples.value_or(qlearn::feature_count(n, m)));
  lo.seed = seed;
  lo.dist = qlearn::GaussianSpec::isotropic(
      file.learn.mean.value_or(Vector::Zero(z)),
      file.learn.covariance_scale.value_or(1.0));

  // The learner sees dims, weights, x0 and xi, and transitions through the
  // oracle; the instance's A and B stay behind the oracle interface.
  std::unique_ptr<qlearn::TransitionOracle> oracle;
  if (opt.replay_path) {
    oracle = std::make_unique<qlearn::ReplayLog>(
        read_replay_log(*opt.replay_path, n, m));
  } else {
    oracle = std::make_unique<qlearn::SimulatedPlant>(inst);
  }
  LearnRun out{qlearn::learn(*oracle, qlearn::learner_view(inst), lo),
               lo.samples};

  if (opt.record_path) {
    std::vector<qlearn::TransitionSample> all;
    for (const auto& st : out.schedule.stages) {
      all.insert(all.end(), st.data.samples.begin(), st.data.samples.end());
    }
    write_replay_log(all, *opt.record_path);
  }
  return out;
}

void execute(Command command, const RunOptions& opt, ordered_json& report) {
  if (command == Command::kCampaign) {
    if (!opt.trials || *opt.trials < 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "campaign requires --trials >= 1");
    }
    harness::CampaignSpec spec;
    spec.count = *opt.trials;
    spec.seed = require_seed(opt, std::nullopt, "campaign");
    spec.threads = std::max(1, opt.threads);
    report["seed"] = spec.seed;
    report["campaign"] = campaign_json(spec, harness::monte_carlo(spec));
    return;
  }

  if (opt.instance_path.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(to_string(command)) + " requires --instance");
  }
  const InstanceFile file = load_instance(opt.instance_path);
  const ProblemInstance& inst = file.instance;
  report["instance_hash"] = instance_hash(inst);

  switch (command) {
    case Command::kSolve: {
      report["solve"] = solve_section(inst, harness::solve_model(inst));
      return;
    }
    case Command::kLearn: {
      const std::uint64_t seed = require_seed(opt, file.learn.seed, "learn");
      report["seed"] = seed;
      const LearnRun L = run_learner(file, opt, seed);
      report["learn"] = learn_section(inst, L.schedule, L.samples);
      return;
    }
    case Command::kVerify: {
      const std::uint64_t seed = require_seed(opt, file.learn.seed, "verify");
      report["seed"] = seed;
      const harness::ModelSolution model = harness::solve_model(inst);
      report["solve"] = solve_section(inst, model);
      const LearnRun L = run_learner(file, opt, seed);
      report["learn"] = learn_section(inst, L.schedule, L.samples);
      report["comparison"] =
          comparison_json(harness::verify_solution(inst, model, &L.schedule));
      return;
    }
    case Command::kReach: {
      const ReachabilityResult r = check_reachability(inst);
      ordered_json j;
      j["reachable"] = r.reachable;
      j["rank"] = r.rank;
      j["residual"] = r.residual;
      j["G1"] = to_json(r.G1);
      j["drift_terminal"] = to_json(r.drift_terminal);
      j["zeta"] = r.zeta ? to_json(*r.zeta) : ordered_json(nullptr);
      report["reachability"] = std::move(j);
      if (!r.reachable) {
        throw Error(ErrorCode::kNotReachable,
                    "xi is not reachable from x0 (G1 rank " +
                        std::to_string(r.rank) + ")");
      }
      return;
    }
    case Command::kCampaign:
      break;
  }
}

}  // namespace

RunResult run(Command command, const RunOptions& options) {
  RunResult result;
  ordered_json& report = result.report;
  report["tool"] = "termlq";
  report["version"] = kToolVersion;
  report["command"] = to_string(command);
  report["status"] = "ok";
  report["instance_hash"] = nullptr;
  report["seed"] = nullptr;
  try {
    execute(command, options, report);
    return result;
  } catch (const Error& e) {
    result.exit_code = exit_code_for(e.code());
    result.message = std::string(termlq::to_string(e.code())) + ": " + e.what();
    report["error"] = {{"code", termlq::to_string(e.code())},
                       {"message", e.what()}};
  } catch (const std::exception& e) {
    result.exit_code = kExitFailure;
    result.message = std::string("InternalError: ") + e.what();
    report["error"] = {{"code", "InternalError"}, {"message", e.what()}};
  }
  report["status"] = "error";
  return result;
}

}  // namespace termlq::cli
