#include "termlq/harness/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <thread>

#include "termlq/error.hpp"
#include "termlq/harness/instances.hpp"
#include "termlq/harness/kkt.hpp"
#include "termlq/harness/verify.hpp"
#include "termlq/qlearn/learner.hpp"
#include "termlq/reachability.hpp"

namespace termlq::harness {

Distribution summarize(std::vector<double> values) {
  Distribution d;
  d.count = static_cast<int>(values.size());
  if (values.empty()) return d;
  std::sort(values.begin(), values.end());
  const auto rank = [&](double q) {
    const auto idx = static_cast<std::size_t>(
        std::ceil(q * static_cast<double>(values.size())));
    return values[std::clamp<std::size_t>(idx, 1, values.size()) - 1];
  };
  d.max = values.back();
  d.median = rank(0.5);
  d.p95 = rank(0.95);
  return d;
}

namespace {

struct TrialOutcome {
  bool reachable = false;
  bool disagreement = false;
  std::optional<std::string> failure;
  std::optional<double> gain_error;
  std::optional<double> lambda_error;
  std::optional<double> cost_gap;
  std::optional<double> input_gap;
  std::optional<double> model_terminal_error;
  std::optional<double> learned_terminal_error;
  std::optional<double> stationarity;
  std::optional<double> condition;
};

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL *
                               (static_cast<std::uint64_t>(trial) + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

TrialOutcome run_trial(const CampaignSpec& spec, int trial) {
  Rng rng(trial_seed(spec.seed, trial));
  std::uniform_int_distribution<int> n_dist(spec.min_state_dim,
                                            spec.max_state_dim);
  std::uniform_int_distribution<int> m_dist(spec.min_input_dim,
                                            spec.max_input_dim);
  std::uniform_int_distribution<int> h_dist(spec.min_horizon,
                                            spec.max_horizon);
  const int n = n_dist(rng);
  const int m = m_dist(rng);
  const int N = h_dist(rng);
  const ProblemInstance inst = random_instance(rng, n, m, N);

  TrialOutcome out;
  const ReachabilityResult reach = check_reachability(inst);
  out.reachable = reach.reachable;
  out.disagreement =
      reach.reachable != terminal_constraint_feasibility(inst).feasible;
  if (!reach.reachable) return out;

  try {
    const ModelSolution model = solve_model(inst);
    std::optional<qlearn::LearnedSchedule> learned;
    if (spec.run_learner) {
      qlearn::LearnOptions opts;
      opts.samples = qlearn::feature_count(n, m) + spec.extra_samples;
      opts.dist = qlearn::GaussianSpec::standard(2 * n + m);
      opts.seed = rng();
      learned = qlearn::learn(qlearn::SimulatedPlant(inst),
                              qlearn::learner_view(inst), opts);
    }
    const ComparisonReport report =
        verify_solution(inst, model, learned ? &*learned : nullptr);
    out.cost_gap = report.cost_gap;
    out.input_gap = report.input_gap;
    out.model_terminal_error = report.terminal_errors.first;
    out.stationarity = report.model_stationarity;
    out.gain_error = report.max_gain_error;
    out.lambda_error = report.lambda_error;
    out.learned_terminal_error = report.terminal_errors.second;
    if (!report.per_stage_condition.empty()) {
      out.condition = *std::max_element(report.per_stage_condition.begin(),
                                        report.per_stage_condition.end());
    }
  } catch (const Error& e) {
    out.failure = to_string(e.code());
  }
  return out;
}

}  // namespace

CampaignSummary monte_carlo(const CampaignSpec& spec) {
  std::vector<TrialOutcome> outcomes(std::max(spec.count, 0));
  std::atomic<int> next{0};
  const auto worker = [&] {
    for (int t = next++; t < spec.count; t = next++) {
      outcomes[t] = run_trial(spec, t);
    }
  };
  const int threads = std::clamp(spec.threads, 1, std::max(spec.count, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  CampaignSummary s;
  s.trials = spec.count;
  std::vector<double> gain, lambda, cost, input, model_term, learned_term,
      station, cond;
  const auto push = [](std::vector<double>& v, const std::optional<double>& x) {
    if (x) v.push_back(*x);
  };
  for (const auto& o : outcomes) {
    (o.reachable ? s.reachable : s.unreachable) += 1;
    s.reach_disagreements += o.disagreement ? 1 : 0;
    if (o.failure) ++s.failures[*o.failure];
    push(gain, o.gain_error);
    push(lambda, o.lambda_error);
    push(cost, o.cost_gap);
    push(input, o.input_gap);
    push(model_term, o.model_terminal_error);
    push(learned_term, o.learned_terminal_error);
    push(station, o.stationarity);
    push(cond, o.condition);
  }
  s.gain_error = summarize(std::move(gain));
  s.lambda_error = summarize(std::move(lambda));
  s.cost_gap = summarize(std::move(cost));
  s.input_gap = summarize(std::move(input));
  s.model_terminal_error = summarize(std::move(model_term));
  s.learned_terminal_error = summarize(std::move(learned_term));
  s.stationarity = summarize(std::move(station));
  s.regressor_condition = summarize(std::move(cond));
  return s;
}

}  // namespace termlq::harness
