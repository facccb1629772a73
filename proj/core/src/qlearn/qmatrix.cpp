#include "termlq/qlearn/qmatrix.hpp"

#include <cmath>

#include "termlq/error.hpp"

namespace termlq::qlearn {

QMatrix::QMatrix(int k, int state_dim, int input_dim, Matrix lambda)
    : k(k), state_dim(state_dim), input_dim(input_dim), Lambda(std::move(lambda)) {
  const int dim = 2 * state_dim + input_dim;
  if (Lambda.rows() != dim || Lambda.cols() != dim) {
    throw Error(ErrorCode::kInvalidArgument,
                "Q-matrix must be " + std::to_string(dim) + " square");
  }
}

Vector pack_upper(const Matrix& sym) {
  const Eigen::Index d = sym.rows();
  Vector out(d * (d + 1) / 2);
  Eigen::Index idx = 0;
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = i; j < d; ++j) out(idx++) = sym(i, j);
  }
  return out;
}

Matrix unpack_upper(const Vector& packed, int dim) {
  if (packed.size() != static_cast<Eigen::Index>(dim) * (dim + 1) / 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "packed length " + std::to_string(packed.size()) +
                    " does not match dimension " + std::to_string(dim));
  }
  Matrix out(dim, dim);
  Eigen::Index idx = 0;
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      out(i, j) = packed(idx);
      out(j, i) = packed(idx);
      ++idx;
    }
  }
  return out;
}

Vector regressor_row(const Vector& z) {
  const Eigen::Index d = z.size();
  Vector out(d * (d + 1) / 2);
  Eigen::Index idx = 0;
  for (Eigen::Index i = 0; i < d; ++i) {
    out(idx++) = z(i) * z(i);
    for (Eigen::Index j = i + 1; j < d; ++j) out(idx++) = 2.0 * z(i) * z(j);
  }
  return out;
}

}  // namespace termlq::qlearn
