#include "blocknorm/inequalities.hpp"

#include <algorithm>
#include <cmath>

#include "blocknorm/errors.hpp"
#include "blocknorm/spectral.hpp"

namespace blocknorm {

std::string_view to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::hermitian_x: return "HermitianX";
    case Hypothesis::skew_hermitian_x: return "SkewHermitianX";
    case Hypothesis::scalar_shift_im: return "ScalarShiftIm";
    case Hypothesis::scalar_shift_re: return "ScalarShiftRe";
    case Hypothesis::commuting_blocks: return "CommutingBlocks";
    case Hypothesis::none: break;
  }
  return "None";
}

InequalityReport check_main_inequality(const BlockMatrix& m, double tolerance) {
  DominanceReport dom = fan_dominates(m.assemble(), m.sum_ab(), tolerance);
  InequalityReport out;
  out.holds = dom.dominated;
  out.margins = std::move(dom.margins);
  out.first_violation = dom.first_violation;
  out.hypothesis = classify(m);
  out.tol = dom.tol;
  out.m_profile = std::move(dom.p_profile);
  out.sum_profile = std::move(dom.q_profile);
  return out;
}

Hypothesis classify(const BlockMatrix& m, double tolerance) {
  const ComplexMatrix& x = m.x();
  const double xf = frobenius_norm(x);  // sub-checks scale with X
  if (frobenius_norm(x - x.adjoint()) <= tolerance * xf) {
    return Hypothesis::hermitian_x;
  }
  if (frobenius_norm(x + x.adjoint()) <= tolerance * xf) {
    return Hypothesis::skew_hermitian_x;
  }
  if (const auto shift = scalar_shift_check(x, tolerance * xf)) {
    return shift->mode == PartMode::im ? Hypothesis::scalar_shift_im
                                       : Hypothesis::scalar_shift_re;
  }
  if (commutes(x.adjoint(), m.a(), tolerance) || commutes(x, m.b(), tolerance)) {
    return Hypothesis::commuting_blocks;
  }
  return Hypothesis::none;
}

bool commutes(const ComplexMatrix& p, const ComplexMatrix& q, double tolerance) {
  if (!p.square() || !q.square() || p.rows() != q.rows()) {
    throw DimensionMismatch("commutes: operands must be square and of equal size");
  }
  const double scale = std::max(1.0, frobenius_norm(p) * frobenius_norm(q));
  return frobenius_norm(p * q - q * p) <= tolerance * scale;
}

std::optional<CongruenceCertificate> reduce_offdiag_to_hermitian(const BlockMatrix& m,
                                                                 double tolerance) {
  if (!is_psd(m.assemble()).psd) {
    throw NotPsd("reduce_offdiag_to_hermitian: matrix is not positive semi-definite");
  }
  const bool a_side = commutes(m.x().adjoint(), m.a(), tolerance);
  const bool b_side = commutes(m.x(), m.b(), tolerance);
  if (!a_side && !b_side) return std::nullopt;

  const PolarFactors polar = polar_right(m.x());
  const ComplexMatrix eye = ComplexMatrix::identity(m.n());
  if (a_side) {
    // diag(U*, I) M diag(U, I) = [A |X|; |X| B] because U commutes with A.
    return CongruenceCertificate{
        direct_sum(polar.unitary, eye),
        BlockMatrix::from_blocks(m.a(), polar.modulus, m.b())};
  }
  // Mirrored side: X U* = U |X| U* = (X X*)^{1/2} and U commutes with B.
  const ComplexMatrix modulus_left =
      hermitized(polar.unitary * polar.modulus * polar.unitary.adjoint());
  return CongruenceCertificate{
      direct_sum(eye, polar.unitary.adjoint()),
      BlockMatrix::from_blocks(m.a(), modulus_left, m.b())};
}

std::optional<ScalarShift> scalar_shift_check(const ComplexMatrix& x, double tolerance) {
  if (!x.square()) throw DimensionMismatch("scalar_shift_check: matrix must be square");
  const double tol_abs =
      tolerance >= 0.0 ? tolerance : tol::classify * std::max(1.0, frobenius_norm(x));
  const std::size_t n = x.rows();
  const ComplexMatrix candidates[2] = {imag_part(x), real_part(x)};
  const PartMode modes[2] = {PartMode::im, PartMode::re};
  for (int i = 0; i < 2; ++i) {
    const double r = trace(candidates[i]).real() / static_cast<double>(n);
    ComplexMatrix shifted = candidates[i];
    for (std::size_t k = 0; k < n; ++k) shifted(k, k) -= r;
    if (frobenius_norm(shifted) <= tol_abs) return ScalarShift{modes[i], r};
  }
  return std::nullopt;
}

ScalarShiftReport check_scalar_shift_inequality(const BlockMatrix& m, double tolerance) {
  if (!is_psd(m.assemble()).psd) {
    throw HypothesisNotMet("scalar-shift check: matrix is not positive semi-definite");
  }
  const auto shift = scalar_shift_check(m.x());
  if (!shift) {
    throw HypothesisNotMet("scalar-shift check: neither Im(X) nor Re(X) is scalar");
  }
  const HalfParts hp = half_parts(m);
  const ComplexMatrix& p1 = shift->mode == PartMode::im ? hp.m1 : hp.n1;
  const ComplexMatrix& p2 = shift->mode == PartMode::im ? hp.m2 : hp.n2;
  const KyFanProfile prof1 = ky_fan_profile(p1);
  const KyFanProfile prof2 = ky_fan_profile(p2);
  const KyFanProfile prof_sum = ky_fan_profile(m.sum_ab());

  ScalarShiftReport out;
  out.shift = *shift;
  out.equality_residuals.resize(m.n());
  for (std::size_t k = 0; k < m.n(); ++k) {
    out.equality_residuals[k] =
        std::abs(prof1.cumsum[k] + prof2.cumsum[k] - prof_sum.cumsum[k]);
  }
  out.inequality = check_main_inequality(m, tolerance);
  return out;
}

FactorTwoReport factor_two_bound(const BlockMatrix& m, double tolerance) {
  if (!is_psd(m.assemble()).psd) {
    throw NotPsd("factor_two_bound: matrix is not positive semi-definite");
  }
  const std::size_t s = 2 * m.n();
  const KyFanProfile prof_m = ky_fan_profile(m.assemble(), s);
  const KyFanProfile prof_sum = ky_fan_profile(m.sum_ab(), s);

  FactorTwoReport out;
  out.tol = tolerance >= 0.0
                ? tolerance
                : tol::dominance * std::max(1.0, 2.0 * prof_sum.trace_norm());
  out.margins.resize(s);
  out.holds = true;
  for (std::size_t k = 0; k < s; ++k) {
    out.margins[k] = 2.0 * prof_sum.cumsum[k] - prof_m.cumsum[k];
    if (out.margins[k] < -out.tol && !out.first_violation) {
      out.first_violation = k + 1;
      out.holds = false;
    }
  }
  out.min_margin = *std::min_element(out.margins.begin(), out.margins.end());

  const HalfParts hp = half_parts(m);
  out.lambda_min_m1 = herm_eig(hp.m1).eigenvalues.back();
  out.lambda_min_m2 = herm_eig(hp.m2).eigenvalues.back();
  const double pd_threshold = tol::strict_pd * prof_sum.spectral();
  out.strict = out.lambda_min_m1 > pd_threshold || out.lambda_min_m2 > pd_threshold;
  return out;
}

}  // namespace blocknorm
