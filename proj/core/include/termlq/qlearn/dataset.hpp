#pragma once

#include <cstdint>
#include <vector>

#include "termlq/linalg.hpp"
#include "termlq/qlearn/oracle.hpp"

namespace termlq::qlearn {

/// Joint Gaussian over z = (x, u, lam).
struct GaussianSpec {
  Vector mean;
  Matrix covariance;

  static GaussianSpec standard(int dim);
  static GaussianSpec isotropic(const Vector& mean, double variance);
};

/// Number of distinct entries of a symmetric (2n+m)x(2n+m) kernel.
constexpr int feature_count(int state_dim, int input_dim) {
  const int z = 2 * state_dim + input_dim;
  return z * (z + 1) / 2;
}

struct StageDataset {
  int k = 0;
  int state_dim = 0;
  int input_dim = 0;
  std::vector<TransitionSample> samples;

  int z_dim() const { return 2 * state_dim + input_dim; }
  int feature_dim() const { return feature_count(state_dim, input_dim); }
};

/// Derives an independent stream seed for stage k from a run seed.
std::uint64_t stage_seed(std::uint64_t seed, int k);

/// Draws `count` probes (x, u, lam) i.i.d. from `dist` and queries the
/// oracle once per probe. Deterministic in `seed`. No sample-count check.
StageDataset draw_stage_data(const TransitionOracle& oracle, int k, int count,
                             const GaussianSpec& dist, std::uint64_t seed);

/// As draw_stage_data, but refuses counts below feature_count with
/// Error(kInsufficientSamples).
StageDataset sample_stage_data(const TransitionOracle& oracle, int k, int count,
                               const GaussianSpec& dist, std::uint64_t seed);

}  // namespace termlq::qlearn
