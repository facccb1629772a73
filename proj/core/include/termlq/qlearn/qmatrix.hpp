#pragma once

#include "termlq/linalg.hpp"

namespace termlq::qlearn {

/// Symmetric stage kernel over z = (x, u, lam):
///
///   [ L11  L21' L31' ]
///   [ L21  L22  L32' ]
///   [ L31  L32  L33  ]
///
/// with L11 n x n, L22 m x m, L33 n x n.
struct QMatrix {
  int k = 0;
  int state_dim = 0;
  int input_dim = 0;
  Matrix Lambda;

  QMatrix() = default;
  QMatrix(int k, int state_dim, int input_dim, Matrix lambda);

  auto L11() const { return Lambda.block(0, 0, state_dim, state_dim); }
  auto L21() const { return Lambda.block(state_dim, 0, input_dim, state_dim); }
  auto L22() const {
    return Lambda.block(state_dim, state_dim, input_dim, input_dim);
  }
  auto L31() const {
    return Lambda.block(state_dim + input_dim, 0, state_dim, state_dim);
  }
  auto L32() const {
    return Lambda.block(state_dim + input_dim, state_dim, state_dim, input_dim);
  }
  auto L33() const {
    return Lambda.block(state_dim + input_dim, state_dim + input_dim,
                        state_dim, state_dim);
  }

  /// z' Lambda z.
  double evaluate(const Vector& z) const { return z.dot(Lambda * z); }
};

/// Upper triangle, row by row: (0,0), (0,1), ..., (0,d-1), (1,1), ...
Vector pack_upper(const Matrix& sym);
Matrix unpack_upper(const Vector& packed, int dim);

/// Features of z in pack_upper order: z_i^2 on the diagonal and 2 z_i z_j
/// off it, so that regressor_row(z) . pack_upper(L) == z' L z.
Vector regressor_row(const Vector& z);

}  // namespace termlq::qlearn
