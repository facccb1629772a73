#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "termlq/linalg.hpp"
#include "termlq/problem.hpp"

namespace termlq::cli {

/// Optional "learn" block of an instance file. Every field may be missing.
struct LearnBlock {
  std::optional<int> samples;         // "l"
  std::optional<std::uint64_t> seed;  // "seed"
  std::optional<Vector> mean;         // over z = (x, u, lam)
  std::optional<double> covariance_scale;
};

struct InstanceFile {
  ProblemInstance instance;
  LearnBlock learn;
};

/// Parses the JSON instance document. Shapes are checked key by key first
/// (Error kParseError names the key and index), then validate_instance runs
/// (Error kValidationError).
InstanceFile parse_instance(const std::string& text);

/// Reads and parses `path`. Error kIoError if it cannot be read.
InstanceFile load_instance(const std::string& path);

/// 64-bit FNV-1a of the canonical serialization, as 16 hex digits.
/// Whitespace and key order in the source file do not matter.
std::string instance_hash(const ProblemInstance& inst);

}  // namespace termlq::cli
