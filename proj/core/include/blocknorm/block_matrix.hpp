#pragma once

#include <array>
#include <string_view>

#include "blocknorm/complex_matrix.hpp"

namespace blocknorm {

/// Whether a construction works with the Hermitian real part or the
/// Hermitian imaginary part of the off-diagonal block.
enum class PartMode { re, im };
std::string_view to_string(PartMode mode);

/// A 2n x 2n Hermitian matrix [A X; X* B] with n x n blocks and Hermitian
/// A, B. Assembly is Hermitian by construction.
class BlockMatrix {
 public:
  /// Validates square equal-sized blocks with Hermitian A and B.
  static BlockMatrix from_blocks(ComplexMatrix a, ComplexMatrix x, ComplexMatrix b);

  /// Splits an even-dimensional Hermitian matrix; the diagonal blocks are
  /// stored exactly Hermitian.
  static BlockMatrix from_assembled(const ComplexMatrix& m);

  std::size_t n() const { return n_; }
  const ComplexMatrix& a() const { return a_; }
  const ComplexMatrix& x() const { return x_; }
  const ComplexMatrix& b() const { return b_; }

  ComplexMatrix assemble() const;
  ComplexMatrix sum_ab() const { return a_ + b_; }

 private:
  BlockMatrix(std::size_t n, ComplexMatrix a, ComplexMatrix x, ComplexMatrix b);

  std::size_t n_ = 0;
  ComplexMatrix a_, x_, b_;
};

/// (X + X*)/2 and (X - X*)/(2i); both Hermitian, X = re + i*im.
ComplexMatrix real_part(const ComplexMatrix& x);
ComplexMatrix imag_part(const ComplexMatrix& x);

/// The four half-part matrices (A+B)/2 +- Im(X) and (A+B)/2 +- Re(X).
/// m1 + m2 = n1 + n2 = A + B, and all four are PSD whenever the parent is.
struct HalfParts {
  ComplexMatrix m1, m2, n1, n2;
};
HalfParts half_parts(const BlockMatrix& m);

/// Loewner-order facts behind the half parts: is A+B above +-2 Im(X) and
/// +-2 Re(X)? Each flag comes with its lambda_min witness.
struct LoewnerBoundsReport {
  // order: plus_im, minus_im, plus_re, minus_re
  std::array<bool, 4> holds{};
  std::array<double, 4> lambda_min{};
  bool all() const { return holds[0] && holds[1] && holds[2] && holds[3]; }
};
LoewnerBoundsReport check_loewner_bounds(const BlockMatrix& m, double tolerance = tol::psd);

/// J* M J for the fixed block rotation J that surfaces the half parts:
/// the diagonal n-blocks of `rotated` are (A+B)/2 + phi(X) (top) and
/// (A+B)/2 - phi(X) (bottom), phi = Re or Im per mode.
struct RotatedForm {
  ComplexMatrix rotated;
  ComplexMatrix rotation;  ///< J, unitary
};
RotatedForm rotate_to_half_parts(const BlockMatrix& m, PartMode mode);

/// Unitaries realizing P = U (P11 + 0) U* + V (0 + P22) V* for PSD P of
/// even dimension, where P11, P22 are the diagonal blocks of P.
struct PinchingUnitaries {
  ComplexMatrix u, v;
};
PinchingUnitaries pinching_decompose(const ComplexMatrix& p);

/// M = u (top + 0) u* + v (0 + bottom) v* with Hermitian PSD summands
/// equal to the half parts of the chosen mode.
struct DecompositionResult {
  ComplexMatrix u, v;
  ComplexMatrix top, bottom;
  PartMode mode = PartMode::im;
};
DecompositionResult decompose_half_parts(const BlockMatrix& m, PartMode mode);

/// u (top + 0) u* + v (0 + bottom) v*, for checking the decomposition.
ComplexMatrix reconstruct(const DecompositionResult& d);

}  // namespace blocknorm
