#pragma once

#include <doctest.h>

#include "blocknorm/complex_matrix.hpp"

namespace blocknorm::testutil {

inline bool matrix_close(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() && frobenius_norm(a - b) <= tol;
}

}  // namespace blocknorm::testutil
