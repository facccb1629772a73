#pragma once

#include <stdexcept>
#include <string>

namespace termlq {

enum class ErrorCode {
  kInvalidArgument,
  kValidationError,
  kSingularGamma,
  kNotReachable,
  kStageOutOfRange,
  kNonFiniteState,
  kInsufficientSamples,
  kOracleMiss,
  kCarryMissing,
  kRankDeficient,
  kSingularBlock,
  kInfeasibleConstraint,
  kSingularKkt,
  kParseError,
  kIoError,
};

/// Stable machine-readable name, e.g. "NotReachable".
const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace termlq
