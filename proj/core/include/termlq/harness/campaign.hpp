#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace termlq::harness {

struct CampaignSpec {
  int count = 0;
  int min_state_dim = 1;
  int max_state_dim = 4;
  int min_input_dim = 1;
  int max_input_dim = 2;
  int min_horizon = 0;
  int max_horizon = 8;
  std::uint64_t seed = 0;
  /// Samples per stage are feature_count(n, m) + extra_samples.
  int extra_samples = 0;
  bool run_learner = true;
  int threads = 1;
};

/// Summary statistics over the trials that produced a value.
struct Distribution {
  int count = 0;
  double max = 0.0;
  double median = 0.0;
  double p95 = 0.0;
};

Distribution summarize(std::vector<double> values);

struct CampaignSummary {
  int trials = 0;
  int reachable = 0;
  int unreachable = 0;
  /// Reachability verdict disagreed with KKT constraint feasibility.
  int reach_disagreements = 0;
  /// Error code name -> number of trials that raised it.
  std::map<std::string, int> failures;
  Distribution gain_error;
  Distribution lambda_error;
  Distribution cost_gap;
  Distribution input_gap;
  Distribution model_terminal_error;
  Distribution learned_terminal_error;
  Distribution stationarity;
  Distribution regressor_condition;
};

/// Seeded random campaign: per trial, draws dims and an instance, screens it
/// with the reachability test, then runs the model solver, the KKT oracle
/// and (optionally) the learner. Failures are counted, never thrown.
CampaignSummary monte_carlo(const CampaignSpec& spec);

}  // namespace termlq::harness
