#include "termlq/qlearn/oracle.hpp"

#include "termlq/error.hpp"

namespace termlq::qlearn {

SimulatedPlant::SimulatedPlant(const ProblemInstance& inst)
    : state_dim_(inst.state_dim),
      input_dim_(inst.input_dim),
      A_(inst.A),
      B_(inst.B) {}

Vector SimulatedPlant::step(int k, const Vector& x, const Vector& u) const {
  if (k < 0 || k >= static_cast<int>(A_.size())) {
    throw Error(ErrorCode::kStageOutOfRange,
                "plant has no stage " + std::to_string(k));
  }
  return A_[k] * x + B_[k] * u;
}

Vector TransitionSample::z() const {
  Vector out(x.size() + u.size() + lam.size());
  out << x, u, lam;
  return out;
}

ReplayLog::ReplayLog(int state_dim, int input_dim)
    : state_dim_(state_dim), input_dim_(input_dim) {}

ReplayLog::Key ReplayLog::key(int k, const Vector& x, const Vector& u) {
  std::vector<double> v(x.data(), x.data() + x.size());
  v.insert(v.end(), u.data(), u.data() + u.size());
  return {k, std::move(v)};
}

void ReplayLog::add(const TransitionSample& sample) {
  if (sample.x.size() != state_dim_ || sample.u.size() != input_dim_ ||
      sample.lam.size() != state_dim_ || sample.x_next.size() != state_dim_) {
    throw Error(ErrorCode::kInvalidArgument,
                "replay record at stage " + std::to_string(sample.k) +
                    " has mismatched dimensions");
  }
  table_[key(sample.k, sample.x, sample.u)] = sample.x_next;
  samples_.push_back(sample);
}

Vector ReplayLog::step(int k, const Vector& x, const Vector& u) const {
  const auto it = table_.find(key(k, x, u));
  if (it == table_.end()) {
    throw Error(ErrorCode::kOracleMiss,
                "replay log has no transition for the requested (x, u) at "
                "stage " + std::to_string(k));
  }
  return it->second;
}

}  // namespace termlq::qlearn
