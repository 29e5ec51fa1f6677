#include "blocknorm/complex_matrix.hpp"

#include <cmath>
#include <utility>

#include "blocknorm/errors.hpp"

namespace blocknorm {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0)) {
  if (rows == 0 || cols == 0) {
    throw DimensionMismatch("matrix dimensions must be positive");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw DimensionMismatch("matrix dimensions must be positive");
  }
  if (entries_.size() != rows * cols) {
    throw DimensionMismatch("entry count does not match rows*cols");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diag(std::span<const double> d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::diag(std::span<const Complex> d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  ComplexMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged initializer rows");
    std::size_t j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                                   std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) {
    throw DimensionMismatch("block exceeds matrix bounds");
  }
  ComplexMatrix out(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
  return out;
}

void ComplexMatrix::set_block(std::size_t row0, std::size_t col0, const ComplexMatrix& b) {
  if (row0 + b.rows() > rows_ || col0 + b.cols() > cols_) {
    throw DimensionMismatch("block exceeds matrix bounds");
  }
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(row0 + i, col0 + j) = b(i, j);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("shape mismatch in +");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("shape mismatch in -");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw DimensionMismatch("shape mismatch in *");
  ComplexMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex(0.0)) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& e : m.entries()) s += std::norm(e);
  return std::sqrt(s);
}

Complex trace(const ComplexMatrix& m) {
  if (!m.square()) throw DimensionMismatch("trace of non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

double hermitian_residual(const ComplexMatrix& m) {
  if (!m.square()) throw DimensionMismatch("hermitian residual of non-square matrix");
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      s += std::norm(m(i, j) - std::conj(m(j, i)));
    }
  }
  return std::sqrt(s);
}

bool is_hermitian(const ComplexMatrix& m, double rel_tol) {
  if (!m.square()) return false;
  return hermitian_residual(m) <= rel_tol * std::max(1.0, frobenius_norm(m));
}

bool all_finite(const ComplexMatrix& m) {
  for (const auto& e : m.entries()) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  }
  return true;
}

ComplexMatrix hermitized(const ComplexMatrix& m) {
  if (!m.square()) throw DimensionMismatch("hermitized() needs a square matrix");
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    }
    out(i, i) = Complex(out(i, i).real(), 0.0);
  }
  return out;
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

ComplexMatrix block_swap(std::size_t n) {
  ComplexMatrix out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, n + i) = 1.0;
    out(n + i, i) = 1.0;
  }
  return out;
}

}  // namespace blocknorm
