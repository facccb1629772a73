#pragma once

#include <string>

#include "json.hpp"
#include "termlq/linalg.hpp"

namespace termlq::cli {

/// Report documents keep insertion order so that serialization is stable.
using ReportFile = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

/// Two-space indented JSON. Floating-point values are written with 17
/// significant digits ("%.17g"); non-finite values become null. Arrays of
/// scalars stay on one line, so a matrix prints one row per line.
std::string serialize_report(const ReportFile& report);

/// Throws Error(kIoError).
void write_report(const ReportFile& report, const std::string& path);

/// Throws Error(kIoError) or Error(kParseError).
ReportFile read_report(const std::string& path);

nlohmann::ordered_json to_json(const Vector& v);
nlohmann::ordered_json to_json(const Matrix& m);  // array of rows
nlohmann::ordered_json to_json(const VectorSeq& seq);
nlohmann::ordered_json to_json(const MatrixSeq& seq);

/// Inverses of to_json. Throw Error(kParseError) on shape mismatch.
Vector vector_from_json(const nlohmann::ordered_json& j);
Matrix matrix_from_json(const nlohmann::ordered_json& j);

}  // namespace termlq::cli
