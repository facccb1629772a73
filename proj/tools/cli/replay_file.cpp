#include "replay_file.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "termlq/error.hpp"

namespace termlq::cli {

namespace {

void append(std::string& line, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, " %.17g", v);
  line += buf;
}

void append(std::string& line, const Vector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) append(line, v(i));
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw Error(ErrorCode::kParseError,
              "replay log line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::string format_replay_log(
    const std::vector<qlearn::TransitionSample>& samples) {
  std::string out;
  for (const auto& s : samples) {
    std::string line = std::to_string(s.k);
    append(line, s.x);
    append(line, s.u);
    append(line, s.lam);
    append(line, s.x_next);
    out += line + '\n';
  }
  return out;
}

void write_replay_log(const std::vector<qlearn::TransitionSample>& samples,
                      const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::kIoError, "cannot open " + path + " for writing");
  f << format_replay_log(samples);
  f.close();
  if (!f) throw Error(ErrorCode::kIoError, "failed writing " + path);
}

qlearn::ReplayLog parse_replay_log(const std::string& text, int state_dim,
                                   int input_dim) {
  const int n = state_dim, m = input_dim;
  const std::size_t fields = 1 + 3 * static_cast<std::size_t>(n) + m;
  qlearn::ReplayLog log(n, m);
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::vector<double> values;
    std::istringstream words(line);
    std::string word;
    while (words >> word) {
      double v = 0.0;
      const auto [end, ec] =
          std::from_chars(word.data(), word.data() + word.size(), v);
      if (ec != std::errc() || end != word.data() + word.size()) {
        fail(line_no, "not a number: \"" + word + "\"");
      }
      values.push_back(v);
    }
    if (values.size() != fields) {
      fail(line_no, "expected " + std::to_string(fields) + " fields, got " +
                        std::to_string(values.size()));
    }
    const double k = values[0];
    if (k != static_cast<int>(k) || k < 0) fail(line_no, "bad stage index");

    const Eigen::Map<const Vector> v(values.data(),
                                     static_cast<Eigen::Index>(fields));
    qlearn::TransitionSample s;
    s.k = static_cast<int>(k);
    s.x = v.segment(1, n);
    s.u = v.segment(1 + n, m);
    s.lam = v.segment(1 + n + m, n);
    s.x_next = v.segment(1 + 2 * n + m, n);
    log.add(s);
  }
  return log;
}

qlearn::ReplayLog read_replay_log(const std::string& path, int state_dim,
                                  int input_dim) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_replay_log(buf.str(), state_dim, input_dim);
}

}  // namespace termlq::cli
