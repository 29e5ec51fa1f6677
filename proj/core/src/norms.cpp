#include "blocknorm/norms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "blocknorm/errors.hpp"
#include "blocknorm/spectral.hpp"
#include "blocknorm/tolerances.hpp"

namespace blocknorm {

double KyFanProfile::ky_fan(std::size_t k) const {
  if (k < 1 || k > cumsum.size()) {
    throw IndexOutOfRange("ky_fan: k = " + std::to_string(k) + " outside 1.." +
                          std::to_string(cumsum.size()));
  }
  return cumsum[k - 1];
}

KyFanProfile ky_fan_profile(const ComplexMatrix& m, std::size_t pad_to) {
  const std::size_t intrinsic = std::min(m.rows(), m.cols());
  if (pad_to < intrinsic) {
    throw IndexOutOfRange("ky_fan_profile: pad size below min(rows, cols)");
  }
  KyFanProfile out;
  out.sigma = svd(m).singular_values;
  out.sigma.resize(pad_to, 0.0);
  out.cumsum.resize(pad_to);
  double acc = 0.0;
  for (std::size_t k = 0; k < pad_to; ++k) {
    acc += out.sigma[k];
    out.cumsum[k] = acc;
  }
  return out;
}

KyFanProfile ky_fan_profile(const ComplexMatrix& m) {
  return ky_fan_profile(m, std::min(m.rows(), m.cols()));
}

double ky_fan(const ComplexMatrix& m, std::size_t k) {
  return ky_fan_profile(m).ky_fan(k);
}

double spectral_norm(const ComplexMatrix& m) {
  const auto s = svd(m).singular_values;
  return s.empty() ? 0.0 : s.front();
}

double trace_norm(const ComplexMatrix& m) {
  double acc = 0.0;
  for (double s : svd(m).singular_values) acc += s;
  return acc;
}

DominanceReport fan_dominates(const ComplexMatrix& p, const ComplexMatrix& q, double tolerance) {
  const std::size_t s =
      std::max(std::max(p.rows(), p.cols()), std::max(q.rows(), q.cols()));
  DominanceReport out;
  out.p_profile = ky_fan_profile(p, s);
  out.q_profile = ky_fan_profile(q, s);
  out.tol = tolerance >= 0.0
                ? tolerance
                : tol::dominance * std::max(1.0, out.q_profile.trace_norm());
  out.margins.resize(s);
  out.dominated = true;
  for (std::size_t k = 0; k < s; ++k) {
    out.margins[k] = out.q_profile.cumsum[k] - out.p_profile.cumsum[k];
    if (out.margins[k] < -out.tol && !out.first_violation) {
      out.first_violation = k + 1;
      out.dominated = false;
    }
  }
  return out;
}

}  // namespace blocknorm
