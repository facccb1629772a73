#include "termlq/problem.hpp"

#include <sstream>

#include "termlq/error.hpp"

namespace termlq {

bool ValidationReport::ok() const { return first_failure() == nullptr; }

const ValidationCheck* ValidationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

std::string ValidationReport::failures() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    if (!c.passed) out << c.name << ": " << c.detail << '\n';
  }
  return out.str();
}

namespace {

std::string shape(Eigen::Index rows, Eigen::Index cols) {
  std::ostringstream s;
  s << rows << "x" << cols;
  return s.str();
}

class Checker {
 public:
  explicit Checker(ValidationReport& report) : report_(report) {}

  bool check(std::string name, bool passed, std::string detail = {}) {
    report_.checks.push_back(
        {std::move(name), passed, passed ? std::string{} : std::move(detail)});
    return passed;
  }

  bool matrix_shape(const std::string& name, const Matrix& m,
                    Eigen::Index rows, Eigen::Index cols) {
    return check("shape " + name, m.rows() == rows && m.cols() == cols,
                 "expected " + shape(rows, cols) + ", got " +
                     shape(m.rows(), m.cols()));
  }

  bool sequence(const std::string& name, const MatrixSeq& seq, int length,
                Eigen::Index rows, Eigen::Index cols) {
    bool ok = check("length " + name, static_cast<int>(seq.size()) == length,
                    "expected " + std::to_string(length) + " entries, got " +
                        std::to_string(seq.size()));
    for (std::size_t k = 0; k < seq.size(); ++k) {
      ok &= matrix_shape(name + "[" + std::to_string(k) + "]", seq[k], rows,
                         cols);
    }
    return ok;
  }

  void symmetric(const std::string& name, const Matrix& m) {
    const double asym = asymmetry(m);
    std::ostringstream d;
    d << "max |M - M'| = " << asym;
    check("symmetric " + name, asym <= definiteness_tolerance(m), d.str());
  }

  void definite(const std::string& name, const Matrix& m, bool strict) {
    const double lo = min_eigenvalue(m);
    std::ostringstream d;
    d << "min eigenvalue " << lo;
    check((strict ? "positive definite " : "positive semidefinite ") + name,
          strict ? is_pd(m) : is_psd(m), d.str());
  }

 private:
  ValidationReport& report_;
};

}  // namespace

ValidationReport validate_instance(const ProblemInstance& inst) {
  ValidationReport report;
  Checker c(report);
  const int n = inst.state_dim;
  const int m = inst.input_dim;
  const int stages = inst.horizon + 1;

  c.check("horizon", inst.horizon >= 0,
          "horizon must be >= 0, got " + std::to_string(inst.horizon));
  bool dims = c.check("state_dim", n > 0,
                      "must be positive, got " + std::to_string(n));
  dims &= c.check("input_dim", m > 0,
                  "must be positive, got " + std::to_string(m));
  if (!dims || inst.horizon < 0) return report;

  bool shapes = c.sequence("A", inst.A, stages, n, n);
  shapes &= c.sequence("B", inst.B, stages, n, m);
  const bool q_ok = c.matrix_shape("Q", inst.Q, n, n);
  const bool r_ok = c.matrix_shape("R", inst.R, m, m);
  const bool h_ok = c.matrix_shape("H", inst.H, n, n);
  c.check("shape x0", inst.x0.size() == n,
          "expected length " + std::to_string(n) + ", got " +
              std::to_string(inst.x0.size()));
  c.check("shape xi", inst.xi.size() == n,
          "expected length " + std::to_string(n) + ", got " +
              std::to_string(inst.xi.size()));
  (void)shapes;

  if (q_ok) {
    c.symmetric("Q", inst.Q);
    c.definite("Q", inst.Q, false);
  }
  if (r_ok) {
    c.symmetric("R", inst.R);
    c.definite("R", inst.R, true);
  }
  if (h_ok) {
    c.symmetric("H", inst.H);
    c.definite("H", inst.H, false);
  }

  bool finite = true;
  for (const auto& a : inst.A) finite &= a.allFinite();
  for (const auto& b : inst.B) finite &= b.allFinite();
  finite &= inst.Q.allFinite() && inst.R.allFinite() && inst.H.allFinite() &&
            inst.x0.allFinite() && inst.xi.allFinite();
  c.check("finite entries", finite, "instance contains NaN or infinity");
  return report;
}

void require_valid(const ProblemInstance& inst) {
  const ValidationReport report = validate_instance(inst);
  if (const auto* bad = report.first_failure()) {
    throw Error(ErrorCode::kValidationError,
                "invalid instance: " + bad->name + ": " + bad->detail);
  }
}

}  // namespace termlq
