#include "instance_file.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "report.hpp"
#include "termlq/error.hpp"

namespace termlq::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParseError, "key \"" + where + "\": " + what);
}

std::string expected_length(std::size_t want, std::size_t got) {
  return "expected length " + std::to_string(want) + ", got " +
         std::to_string(got);
}

const json& require(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) fail(key, "missing");
  return *it;
}

int read_int(const json& doc, const char* key) {
  const json& j = require(doc, key);
  if (!j.is_number_integer()) fail(key, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < -1000000 || v > 1000000) fail(key, "out of range");
  return static_cast<int>(v);
}

double read_number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

Vector read_vector(const json& j, const std::string& where, int len) {
  if (!j.is_array()) fail(where, "expected an array");
  if (j.size() != static_cast<std::size_t>(len)) {
    fail(where, expected_length(len, j.size()));
  }
  Vector v(len);
  for (int i = 0; i < len; ++i) {
    v(i) = read_number(j[i], where + "[" + std::to_string(i) + "]");
  }
  return v;
}

// Row-major: an array of `rows` arrays of `cols` numbers.
Matrix read_matrix(const json& j, const std::string& where, int rows,
                   int cols) {
  if (!j.is_array()) fail(where, "expected an array of rows");
  if (j.size() != static_cast<std::size_t>(rows)) {
    fail(where, expected_length(rows, j.size()));
  }
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    m.row(r) = read_vector(j[r], where + "[" + std::to_string(r) + "]", cols)
                   .transpose();
  }
  return m;
}

MatrixSeq read_sequence(const json& doc, const char* key, int len, int rows,
                        int cols) {
  const json& j = require(doc, key);
  if (!j.is_array()) fail(key, "expected an array of matrices");
  if (j.size() != static_cast<std::size_t>(len)) {
    fail(key, expected_length(len, j.size()));
  }
  MatrixSeq out;
  for (int k = 0; k < len; ++k) {
    out.push_back(read_matrix(j[k], std::string(key) + "[" + std::to_string(k) +
                                        "]",
                              rows, cols));
  }
  return out;
}

LearnBlock read_learn(const json& j, int z_dim) {
  if (!j.is_object()) fail("learn", "expected an object");
  LearnBlock b;
  if (const auto it = j.find("l"); it != j.end()) {
    if (!it->is_number_integer() || it->get<std::int64_t>() < 0 ||
        it->get<std::int64_t>() > 100000000) {
      fail("learn.l", "expected a non-negative integer");
    }
    b.samples = it->get<int>();
  }
  if (const auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_unsigned()) {
      fail("learn.seed", "expected a non-negative integer");
    }
    b.seed = it->get<std::uint64_t>();
  }
  if (const auto it = j.find("mean"); it != j.end()) {
    b.mean = read_vector(*it, "learn.mean", z_dim);
  }
  if (const auto it = j.find("covariance_scale"); it != j.end()) {
    const double s = read_number(*it, "learn.covariance_scale");
    if (!(s > 0.0)) fail("learn.covariance_scale", "must be positive");
    b.covariance_scale = s;
  }
  return b;
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const bool empty = text.find_first_not_of(" \t\r\n") == std::string::npos;
    throw Error(ErrorCode::kParseError,
                std::string("document root: ") +
                    (empty ? "empty document" : e.what()));
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kParseError, "document root: expected an object");
  }

  InstanceFile out;
  ProblemInstance& inst = out.instance;
  inst.state_dim = read_int(doc, "n");
  inst.input_dim = read_int(doc, "m");
  inst.horizon = read_int(doc, "N");
  // Shapes cannot be checked against nonsensical dimensions.
  if (inst.state_dim < 1 || inst.input_dim < 1 || inst.horizon < 0) {
    throw Error(ErrorCode::kValidationError,
                "dimensions: need n >= 1, m >= 1, N >= 0");
  }
  const int n = inst.state_dim, m = inst.input_dim;
  const int stages = inst.horizon + 1;
  inst.A = read_sequence(doc, "A", stages, n, n);
  inst.B = read_sequence(doc, "B", stages, n, m);
  inst.Q = read_matrix(require(doc, "Q"), "Q", n, n);
  inst.R = read_matrix(require(doc, "R"), "R", m, m);
  inst.H = read_matrix(require(doc, "H"), "H", n, n);
  inst.x0 = read_vector(require(doc, "x0"), "x0", n);
  inst.xi = read_vector(require(doc, "xi"), "xi", n);
  if (const auto it = doc.find("learn"); it != doc.end()) {
    out.learn = read_learn(*it, 2 * n + m);
  }

  require_valid(inst);
  return out;
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  if (f.bad()) throw Error(ErrorCode::kIoError, "failed reading " + path);
  return parse_instance(buf.str());
}

std::string instance_hash(const ProblemInstance& inst) {
  ReportFile canon;
  canon["n"] = inst.state_dim;
  canon["m"] = inst.input_dim;
  canon["N"] = inst.horizon;
  canon["A"] = to_json(inst.A);
  canon["B"] = to_json(inst.B);
  canon["Q"] = to_json(inst.Q);
  canon["R"] = to_json(inst.R);
  canon["H"] = to_json(inst.H);
  canon["x0"] = to_json(inst.x0);
  canon["xi"] = to_json(inst.xi);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : serialize_report(canon)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

}  // namespace termlq::cli
