#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "report.hpp"
#include "termlq/error.hpp"

namespace termlq::cli {

enum class Command { kSolve, kLearn, kVerify, kReach, kCampaign };

std::optional<Command> parse_command(const std::string& name);
const char* to_string(Command command);

struct RunOptions {
  std::string instance_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;              // per stage
  std::optional<std::string> replay_path;  // learn from a recorded log
  std::optional<std::string> record_path;  // write the transitions used
  std::optional<int> trials;               // campaign
  int threads = 1;                         // campaign
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNotReachable = 3;
inline constexpr int kExitData = 4;
inline constexpr int kExitIo = 5;

int exit_code_for(ErrorCode code);

struct RunResult {
  int exit_code = kExitOk;
  ReportFile report;
  std::string message;  // empty on success
};

/// Runs one command. Never throws: failures are encoded in the exit code
/// and in the report's "error" block.
RunResult run(Command command, const RunOptions& options);

}  // namespace termlq::cli
