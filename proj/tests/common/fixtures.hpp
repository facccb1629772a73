#pragma once

#include <Eigen/Dense>

#include "termlq/problem.hpp"

namespace termlq::testing {

/// The two-state, single-input, three-stage example with Q = I, R = 1,
/// H = I, x0 = (1, 2), xi = (6, 7).
inline ProblemInstance reference_instance() {
  ProblemInstance inst;
  inst.horizon = 2;
  inst.state_dim = 2;
  inst.input_dim = 1;
  Matrix a0(2, 2), a1(2, 2), a2(2, 2);
  // clang-format off
  a0 << 1, 2,
       -1, 4;
  a1 << 5, 3,
       -2, 1;
  a2 << -4, 1,
         2, 5;
  // clang-format on
  inst.A = {a0, a1, a2};
  inst.B = {(Matrix(2, 1) << 1, -1).finished(),
            (Matrix(2, 1) << 2, 1).finished(),
            (Matrix(2, 1) << 4, 2).finished()};
  inst.Q = Matrix::Identity(2, 2);
  inst.R = Matrix::Identity(1, 1);
  inst.H = Matrix::Identity(2, 2);
  inst.x0 = (Vector(2) << 1, 2).finished();
  inst.xi = (Vector(2) << 6, 7).finished();
  return inst;
}

/// n = m = 1, N = 0, A = B = 1, Q = H = 0, R = 1.
inline ProblemInstance scalar_instance(double x0, double xi) {
  ProblemInstance inst;
  inst.horizon = 0;
  inst.state_dim = 1;
  inst.input_dim = 1;
  inst.A = {Matrix::Ones(1, 1)};
  inst.B = {Matrix::Ones(1, 1)};
  inst.Q = Matrix::Zero(1, 1);
  inst.R = Matrix::Ones(1, 1);
  inst.H = Matrix::Zero(1, 1);
  inst.x0 = Vector::Constant(1, x0);
  inst.xi = Vector::Constant(1, xi);
  return inst;
}

inline Matrix row(std::initializer_list<double> v) {
  Matrix out(1, static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(0, i++) = x;
  return out;
}

inline Matrix mat2(double a, double b, double c, double d) {
  return (Matrix(2, 2) << a, b, c, d).finished();
}

}  // namespace termlq::testing
