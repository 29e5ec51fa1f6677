#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "blocknorm/complex_matrix.hpp"

namespace blocknorm {

/// Sorted singular values together with their partial sums. The partial-sum
/// ladder is the finite proxy for "every unitarily invariant norm": one
/// matrix dominates another in all such norms iff it does at every rung.
struct KyFanProfile {
  std::vector<double> sigma;   ///< descending, zero-padded to the profile size
  std::vector<double> cumsum;  ///< cumsum[k-1] = sigma_1 + ... + sigma_k

  std::size_t size() const { return sigma.size(); }
  double ky_fan(std::size_t k) const;  ///< 1-based; IndexOutOfRange otherwise
  double spectral() const { return cumsum.front(); }
  double trace_norm() const { return cumsum.back(); }
};

/// Profile over exactly pad_to singular values; padding appends zeros,
/// matching the embedding of a matrix as the top-left block of a larger one.
KyFanProfile ky_fan_profile(const ComplexMatrix& m, std::size_t pad_to);
KyFanProfile ky_fan_profile(const ComplexMatrix& m);

/// Sum of the k largest singular values, 1 <= k <= min(rows, cols).
double ky_fan(const ComplexMatrix& m, std::size_t k);

double spectral_norm(const ComplexMatrix& m);
double trace_norm(const ComplexMatrix& m);
// frobenius_norm lives in complex_matrix.hpp; the entrywise sum equals
// sqrt(sum sigma_i^2).

/// Per-rung comparison of two profiles after padding to a common size.
struct DominanceReport {
  bool dominated = false;               ///< all margins >= -tol
  std::vector<double> margins;          ///< margins[k-1] = ||Q||_k - ||P||_k
  std::optional<std::size_t> first_violation;  ///< smallest violating k (1-based)
  double tol = 0.0;
  KyFanProfile p_profile;
  KyFanProfile q_profile;
};

/// Does Q dominate P at every Ky Fan rung? Both operands are padded to the
/// larger dimension. Negative tolerance selects the default
/// tol::dominance * max(1, trace norm of Q).
DominanceReport fan_dominates(const ComplexMatrix& p, const ComplexMatrix& q, double tolerance = -1.0);

}  // namespace blocknorm
