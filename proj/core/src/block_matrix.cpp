#include "blocknorm/block_matrix.hpp"

#include <cmath>
#include <utility>

#include "blocknorm/errors.hpp"
#include "blocknorm/spectral.hpp"

namespace blocknorm {

std::string_view to_string(PartMode mode) { return mode == PartMode::re ? "re" : "im"; }

BlockMatrix::BlockMatrix(std::size_t n, ComplexMatrix a, ComplexMatrix x, ComplexMatrix b)
    : n_(n), a_(std::move(a)), x_(std::move(x)), b_(std::move(b)) {}

BlockMatrix BlockMatrix::from_blocks(ComplexMatrix a, ComplexMatrix x, ComplexMatrix b) {
  const std::size_t n = a.rows();
  if (!a.square() || !x.square() || !b.square() || x.rows() != n || b.rows() != n) {
    throw DimensionMismatch("BlockMatrix: blocks must be square and of equal size");
  }
  if (!all_finite(a) || !all_finite(x) || !all_finite(b)) {
    throw DimensionMismatch("BlockMatrix: blocks must have finite entries");
  }
  if (!is_hermitian(a)) throw NonHermitianInput("BlockMatrix: block A is not Hermitian");
  if (!is_hermitian(b)) throw NonHermitianInput("BlockMatrix: block B is not Hermitian");
  return BlockMatrix(n, std::move(a), std::move(x), std::move(b));
}

BlockMatrix BlockMatrix::from_assembled(const ComplexMatrix& m) {
  if (!m.square() || m.rows() % 2 != 0) {
    throw DimensionMismatch("BlockMatrix: assembled form must be square of even dimension");
  }
  if (!is_hermitian(m)) {
    throw NonHermitianInput("BlockMatrix: assembled form is not Hermitian");
  }
  const std::size_t n = m.rows() / 2;
  return BlockMatrix(n, hermitized(m.block(0, 0, n, n)), m.block(0, n, n, n),
                     hermitized(m.block(n, n, n, n)));
}

ComplexMatrix BlockMatrix::assemble() const {
  ComplexMatrix m(2 * n_, 2 * n_);
  m.set_block(0, 0, a_);
  m.set_block(0, n_, x_);
  m.set_block(n_, 0, x_.adjoint());
  m.set_block(n_, n_, b_);
  return m;
}

ComplexMatrix real_part(const ComplexMatrix& x) {
  if (!x.square()) throw DimensionMismatch("real_part: matrix must be square");
  return (x + x.adjoint()) * Complex(0.5);
}

ComplexMatrix imag_part(const ComplexMatrix& x) {
  if (!x.square()) throw DimensionMismatch("imag_part: matrix must be square");
  return (x - x.adjoint()) * Complex(0.0, -0.5);
}

HalfParts half_parts(const BlockMatrix& m) {
  const ComplexMatrix half_sum = m.sum_ab() * Complex(0.5);
  const ComplexMatrix im = imag_part(m.x());
  const ComplexMatrix re = real_part(m.x());
  return HalfParts{half_sum + im, half_sum - im, half_sum + re, half_sum - re};
}

LoewnerBoundsReport check_loewner_bounds(const BlockMatrix& m, double tolerance) {
  const ComplexMatrix sum = m.sum_ab();
  const ComplexMatrix im2 = imag_part(m.x()) * Complex(2.0);
  const ComplexMatrix re2 = real_part(m.x()) * Complex(2.0);
  const ComplexMatrix candidates[4] = {sum + im2, sum - im2, sum + re2, sum - re2};
  LoewnerBoundsReport out;
  for (int i = 0; i < 4; ++i) {
    const PsdCheck c = is_psd(hermitized(candidates[i]), tolerance);
    out.holds[i] = c.psd;
    out.lambda_min[i] = c.lambda_min;
  }
  return out;
}

RotatedForm rotate_to_half_parts(const BlockMatrix& m, PartMode mode) {
  const std::size_t n = m.n();
  // J = (1/sqrt 2) [I I; cI -cI]; the top diagonal block of J* M J is
  // (A+B)/2 + Re(cX), so c = -i surfaces +Im(X) and c = 1 surfaces +Re(X).
  const Complex c = mode == PartMode::im ? Complex(0.0, -1.0) : Complex(1.0);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ComplexMatrix j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, i) = inv_sqrt2;
    j(i, n + i) = inv_sqrt2;
    j(n + i, i) = c * inv_sqrt2;
    j(n + i, n + i) = -c * inv_sqrt2;
  }
  return RotatedForm{j.adjoint() * m.assemble() * j, std::move(j)};
}

PinchingUnitaries pinching_decompose(const ComplexMatrix& p) {
  if (!p.square() || p.rows() % 2 != 0) {
    throw DimensionMismatch("pinching_decompose: matrix must be square of even dimension");
  }
  const std::size_t n = p.rows() / 2;
  const ComplexMatrix root = matrix_sqrt_psd(hermitized(p));  // NotPsd if not PSD

  // Split the root by columns: P = C C* with C Hermitian, so
  // C1 C1* + C2 C2* = P while C1* C1 = P11 and C2* C2 = P22.
  const ComplexMatrix c1 = root.block(0, 0, 2 * n, n);
  const ComplexMatrix c2 = root.block(0, n, 2 * n, n);
  const SvdResult s1 = svd(c1);
  const SvdResult s2 = svd(c2);
  const ComplexMatrix eye = ComplexMatrix::identity(n);

  // C1 C1* = W1 (S1*S1 + 0) W1* = [W1 (G1 + I)*] (P11 + 0) [...]*.
  PinchingUnitaries out;
  out.u = s1.u * direct_sum(s1.v, eye).adjoint();
  // The bottom summand additionally needs the swap that moves P22 downstairs.
  out.v = s2.u * block_swap(n) * direct_sum(eye, s2.v).adjoint();
  return out;
}

DecompositionResult decompose_half_parts(const BlockMatrix& m, PartMode mode) {
  const RotatedForm rot = rotate_to_half_parts(m, mode);
  const PinchingUnitaries pin = pinching_decompose(rot.rotated);
  const HalfParts hp = half_parts(m);

  DecompositionResult out;
  out.mode = mode;
  out.top = mode == PartMode::im ? hp.m1 : hp.n1;
  out.bottom = mode == PartMode::im ? hp.m2 : hp.n2;
  out.u = rot.rotation * pin.u;
  out.v = rot.rotation * pin.v;
  return out;
}

ComplexMatrix reconstruct(const DecompositionResult& d) {
  const std::size_t n = d.top.rows();
  ComplexMatrix top_padded(2 * n, 2 * n);
  top_padded.set_block(0, 0, d.top);
  ComplexMatrix bottom_padded(2 * n, 2 * n);
  bottom_padded.set_block(n, n, d.bottom);
  return d.u * top_padded * d.u.adjoint() + d.v * bottom_padded * d.v.adjoint();
}

}  // namespace blocknorm
