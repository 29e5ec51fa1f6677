#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "blocknorm/block_matrix.hpp"
#include "blocknorm/norms.hpp"

namespace blocknorm {

/// Structural condition on the off-diagonal block that guarantees the norm
/// inequality ||M|| <= ||A+B|| for PSD M. Most specific first; `none` means
/// no implemented sufficient condition applies.
enum class Hypothesis {
  hermitian_x,
  skew_hermitian_x,
  scalar_shift_im,
  scalar_shift_re,
  commuting_blocks,
  none,
};
std::string_view to_string(Hypothesis h);

/// Outcome of comparing ||M||_k against ||(A+B) + 0||_k at every rung.
struct InequalityReport {
  bool holds = false;
  std::vector<double> margins;  ///< margins[k-1] = ||(A+B)+0||_k - ||M||_k
  std::optional<std::size_t> first_violation;
  Hypothesis hypothesis = Hypothesis::none;
  double tol = 0.0;
  KyFanProfile m_profile;
  KyFanProfile sum_profile;
};

/// Does A+B dominate M in every unitarily invariant norm? Meaningful for any
/// well-formed block matrix; the guarantee only exists under PSD + one of
/// the Hypothesis conditions.
InequalityReport check_main_inequality(const BlockMatrix& m, double tolerance = -1.0);

/// First matching tag in the fixed priority order
/// hermitian_x, skew_hermitian_x, scalar_shift_im, scalar_shift_re,
/// commuting_blocks, none. Sub-checks scale with the operand norms, so the
/// tag is invariant under positive scaling of M.
Hypothesis classify(const BlockMatrix& m, double tolerance = tol::classify);

/// ||PQ - QP||_F <= tolerance * max(1, ||P||_F * ||Q||_F).
bool commutes(const ComplexMatrix& p, const ComplexMatrix& q, double tolerance = tol::classify);

/// Witness that M is unitarily congruent to a block matrix with Hermitian
/// off-diagonal block: w* M w = assemble(reduced), reduced.x Hermitian PSD.
struct CongruenceCertificate {
  ComplexMatrix w;      ///< 2n x 2n unitary
  BlockMatrix reduced;  ///< [A |X|; |X| B] (or the mirrored form)
};

/// Polar-based reduction for PSD M whose X* commutes with A (or X with B).
/// Returns nothing when neither commutation holds; NotPsd when M is not PSD.
std::optional<CongruenceCertificate> reduce_offdiag_to_hermitian(const BlockMatrix& m,
                                                                 double tolerance = tol::classify);

/// Detection of Im(X) = rI or Re(X) = rI (Im takes precedence).
struct ScalarShift {
  PartMode mode = PartMode::im;
  double r = 0.0;
};

/// Negative tolerance selects the default tol::classify * max(1, ||X||_F).
std::optional<ScalarShift> scalar_shift_check(const ComplexMatrix& x, double tolerance = -1.0);

/// Inequality check for the scalar-shift case, together with the per-rung
/// identity sum_k sigma(P1) + sum_k sigma(P2) = sum_k sigma(A+B) that powers
/// it (P1, P2 the half parts of the detected mode).
struct ScalarShiftReport {
  InequalityReport inequality;
  std::vector<double> equality_residuals;  ///< per k = 1..n
  ScalarShift shift;
};
ScalarShiftReport check_scalar_shift_inequality(const BlockMatrix& m, double tolerance = -1.0);

/// ||M||_k <= 2 ||A+B||_k for all k, for any PSD M. `strict` reports whether
/// a half part is positive definite, which forces a strictly positive margin.
struct FactorTwoReport {
  bool holds = false;
  std::vector<double> margins;  ///< margins[k-1] = 2||A+B||_k - ||M||_k
  std::optional<std::size_t> first_violation;
  bool strict = false;
  double min_margin = 0.0;
  double lambda_min_m1 = 0.0;
  double lambda_min_m2 = 0.0;
  double tol = 0.0;
};
FactorTwoReport factor_two_bound(const BlockMatrix& m, double tolerance = -1.0);

}  // namespace blocknorm
