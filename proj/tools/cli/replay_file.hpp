#pragma once

#include <string>
#include <vector>

#include "termlq/qlearn/oracle.hpp"

namespace termlq::cli {

// Replay logs are plain text, one transition per line:
//
//   k x[0..n) u[0..m) lam[0..n) x_next[0..n)
//
// whitespace separated, doubles at 17 significant digits so that a log
// replays bit-exactly. Blank lines and lines starting with '#' are skipped.

std::string format_replay_log(
    const std::vector<qlearn::TransitionSample>& samples);

/// Throws Error(kIoError).
void write_replay_log(const std::vector<qlearn::TransitionSample>& samples,
                      const std::string& path);

/// Throws Error(kParseError) with the offending line number.
qlearn::ReplayLog parse_replay_log(const std::string& text, int state_dim,
                                   int input_dim);

/// Throws Error(kIoError) or Error(kParseError).
qlearn::ReplayLog read_replay_log(const std::string& path, int state_dim,
                                  int input_dim);

}  // namespace termlq::cli
