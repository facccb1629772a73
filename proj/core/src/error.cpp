#include "termlq/error.hpp"

namespace termlq {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kSingularGamma: return "SingularGamma";
    case ErrorCode::kNotReachable: return "NotReachable";
    case ErrorCode::kStageOutOfRange: return "StageOutOfRange";
    case ErrorCode::kNonFiniteState: return "NonFiniteState";
    case ErrorCode::kInsufficientSamples: return "InsufficientSamples";
    case ErrorCode::kOracleMiss: return "OracleMiss";
    case ErrorCode::kCarryMissing: return "CarryMissing";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kSingularBlock: return "SingularBlock";
    case ErrorCode::kInfeasibleConstraint: return "InfeasibleConstraint";
    case ErrorCode::kSingularKkt: return "SingularKkt";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace termlq
