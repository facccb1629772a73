#pragma once

#include <map>
#include <utility>
#include <vector>

#include "termlq/linalg.hpp"
#include "termlq/problem.hpp"

namespace termlq::qlearn {

/// The only window the learner has onto the plant: one-step transitions
/// (k, x, u) -> x(k+1).
class TransitionOracle {
 public:
  virtual ~TransitionOracle() = default;

  virtual int state_dim() const = 0;
  virtual int input_dim() const = 0;
  virtual Vector step(int k, const Vector& x, const Vector& u) const = 0;
};

/// Noise-free plant x(k+1) = A(k) x + B(k) u. Keeps only A and B.
class SimulatedPlant final : public TransitionOracle {
 public:
  explicit SimulatedPlant(const ProblemInstance& inst);

  int state_dim() const override { return state_dim_; }
  int input_dim() const override { return input_dim_; }
  Vector step(int k, const Vector& x, const Vector& u) const override;

 private:
  int state_dim_;
  int input_dim_;
  MatrixSeq A_;
  MatrixSeq B_;
};

struct TransitionSample {
  int k = 0;
  Vector x;
  Vector u;
  Vector lam;
  Vector x_next;

  /// Stacked (x, u, lam).
  Vector z() const;
};

/// Serves previously recorded transitions. Lookup is by stage and the
/// exact bit pattern of (x, u); anything else is an OracleMiss.
class ReplayLog final : public TransitionOracle {
 public:
  ReplayLog(int state_dim, int input_dim);

  void add(const TransitionSample& sample);
  std::size_t size() const { return table_.size(); }
  /// Recorded samples, in insertion order.
  const std::vector<TransitionSample>& samples() const { return samples_; }

  int state_dim() const override { return state_dim_; }
  int input_dim() const override { return input_dim_; }
  Vector step(int k, const Vector& x, const Vector& u) const override;

 private:
  using Key = std::pair<int, std::vector<double>>;
  static Key key(int k, const Vector& x, const Vector& u);

  int state_dim_;
  int input_dim_;
  std::map<Key, Vector> table_;
  std::vector<TransitionSample> samples_;
};

}  // namespace termlq::qlearn
