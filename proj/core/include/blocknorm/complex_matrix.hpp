#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "blocknorm/tolerances.hpp"

namespace blocknorm {

using Complex = std::complex<double>;

/// Dense complex matrix in row-major order. Plain value type: copies are
/// deep, instances are immutable in spirit (operations return new values).
/// Sizes here are desk scale, so no attempt is made at blocked arithmetic.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diag(std::span<const double> d);
  static ComplexMatrix diag(std::span<const Complex> d);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }
  bool square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix adjoint() const;

  /// Copy of the sub-block starting at (row0, col0).
  ComplexMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t row0, std::size_t col0, const ComplexMatrix& b);

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex s) { return lhs *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix rhs) { return rhs *= s; }
  friend ComplexMatrix operator-(const ComplexMatrix& m) { return m * Complex(-1.0); }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

double frobenius_norm(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);

/// ||M - M*||_F. Throws DimensionMismatch on non-square input.
double hermitian_residual(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double rel_tol = tol::hermiticity);
bool all_finite(const ComplexMatrix& m);

/// (M + M*)/2 with the diagonal forced real.
ComplexMatrix hermitized(const ComplexMatrix& m);

/// Block-diagonal matrix [a 0; 0 b].
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

/// Off-diagonal block permutation [0 I_n; I_n 0] of order 2n.
ComplexMatrix block_swap(std::size_t n);

}  // namespace blocknorm
