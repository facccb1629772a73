#include "termlq/qlearn/dataset.hpp"

#include <random>
#include <sstream>

#include "termlq/error.hpp"

namespace termlq::qlearn {

GaussianSpec GaussianSpec::standard(int dim) {
  return {Vector::Zero(dim), Matrix::Identity(dim, dim)};
}

GaussianSpec GaussianSpec::isotropic(const Vector& mean, double variance) {
  return {mean, variance * Matrix::Identity(mean.size(), mean.size())};
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t stage_seed(std::uint64_t seed, int k) {
  return splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(k));
}

StageDataset draw_stage_data(const TransitionOracle& oracle, int k, int count,
                             const GaussianSpec& dist, std::uint64_t seed) {
  const int n = oracle.state_dim();
  const int m = oracle.input_dim();
  const int dim = 2 * n + m;
  if (dist.mean.size() != dim || dist.covariance.rows() != dim ||
      dist.covariance.cols() != dim) {
    throw Error(ErrorCode::kInvalidArgument,
                "probe distribution must have dimension " +
                    std::to_string(dim));
  }
  Eigen::LLT<Matrix> llt(symmetrize(dist.covariance));
  if (llt.info() != Eigen::Success || !is_pd(dist.covariance)) {
    throw Error(ErrorCode::kInvalidArgument,
                "probe covariance must be positive definite");
  }
  const Matrix L = llt.matrixL();

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  StageDataset ds;
  ds.k = k;
  ds.state_dim = n;
  ds.input_dim = m;
  ds.samples.reserve(count);
  Vector white(dim);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < dim; ++j) white(j) = normal(rng);
    const Vector z = dist.mean + L * white;
    TransitionSample s;
    s.k = k;
    s.x = z.head(n);
    s.u = z.segment(n, m);
    s.lam = z.tail(n);
    s.x_next = oracle.step(k, s.x, s.u);
    ds.samples.push_back(std::move(s));
  }
  return ds;
}

StageDataset sample_stage_data(const TransitionOracle& oracle, int k, int count,
                               const GaussianSpec& dist, std::uint64_t seed) {
  const int needed = feature_count(oracle.state_dim(), oracle.input_dim());
  if (count < needed) {
    std::ostringstream msg;
    msg << "stage " << k << ": " << count << " samples, at least " << needed
        << " required";
    throw Error(ErrorCode::kInsufficientSamples, msg.str());
  }
  return draw_stage_data(oracle, k, count, dist, seed);
}

}  // namespace termlq::qlearn
