#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "termlq/error.hpp"

namespace termlq::cli {

using nlohmann::ordered_json;

namespace {

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool is_scalar(const ordered_json& j) {
  return !j.is_array() && !j.is_object();
}

void emit(const ordered_json& j, std::string& out, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close_pad(2 * depth, ' ');
  switch (j.type()) {
    case ordered_json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    case ordered_json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool flat = true;
      for (const auto& e : j) flat = flat && is_scalar(e);
      if (flat) {
        out += '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          emit(j[i], out, depth + 1);
        }
        out += ']';
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out += pad;
        emit(j[i], out, depth + 1);
        out += i + 1 < j.size() ? ",\n" : "\n";
      }
      out += close_pad + ']';
      return;
    }
    case ordered_json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t i = 0;
      for (const auto& [key, value] : j.items()) {
        out += pad + ordered_json(key).dump() + ": ";
        emit(value, out, depth + 1);
        out += ++i < j.size() ? ",\n" : "\n";
      }
      out += close_pad + '}';
      return;
    }
    default:
      // Strings, integers, booleans and null: nlohmann's output is already
      // canonical.
      out += j.dump();
      return;
  }
}

double number_or_nan(const ordered_json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (!j.is_number()) throw Error(ErrorCode::kParseError, "expected a number");
  return j.get<double>();
}

}  // namespace

std::string serialize_report(const ReportFile& report) {
  std::string out;
  emit(report, out, 0);
  out += '\n';
  return out;
}

void write_report(const ReportFile& report, const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::kIoError, "cannot open " + path + " for writing");
  f << serialize_report(report);
  f.close();
  if (!f) throw Error(ErrorCode::kIoError, "failed writing " + path);
}

ReportFile read_report(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  try {
    return ordered_json::parse(buf.str());
  } catch (const ordered_json::parse_error& e) {
    throw Error(ErrorCode::kParseError, path + ": " + e.what());
  }
}

ordered_json to_json(const Vector& v) {
  ordered_json j = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v(i));
  return j;
}

ordered_json to_json(const Matrix& m) {
  ordered_json j = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    j.push_back(std::move(row));
  }
  return j;
}

ordered_json to_json(const VectorSeq& seq) {
  ordered_json j = ordered_json::array();
  for (const Vector& v : seq) j.push_back(to_json(v));
  return j;
}

ordered_json to_json(const MatrixSeq& seq) {
  ordered_json j = ordered_json::array();
  for (const Matrix& m : seq) j.push_back(to_json(m));
  return j;
}

Vector vector_from_json(const ordered_json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParseError, "expected an array");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = number_or_nan(j[i]);
  return v;
}

Matrix matrix_from_json(const ordered_json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParseError, "expected an array");
  if (j.empty()) return Matrix(0, 0);
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  Matrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw Error(ErrorCode::kParseError, "ragged matrix rows");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = number_or_nan(j[r][c]);
  }
  return m;
}

}  // namespace termlq::cli
