#pragma once

#include <cstdint>
#include <optional>

#include "blocknorm/block_matrix.hpp"
#include "blocknorm/counterexamples.hpp"

namespace blocknorm {

/// Counter-based pseudo-random stream: every draw is a fixed scramble of a
/// counter keyed by (seed, stream), so shards indexed by stream are
/// reproducible and independent of evaluation order.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  double uniform();                       ///< [0, 1)
  double uniform(double lo, double hi);   ///< [lo, hi)
  double gauss();                         ///< standard normal (Box-Muller)
  Complex cgauss();                       ///< independent N(0,1) parts

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, CounterRng& rng);
ComplexMatrix random_hermitian(std::size_t n, CounterRng& rng);
ComplexMatrix random_unitary(std::size_t n, CounterRng& rng);
/// G*G for Gaussian G: a full-rank-a.s. PSD sample.
ComplexMatrix random_psd(std::size_t n, CounterRng& rng);

/// Structural class imposed on the off-diagonal block when sampling PSD
/// block matrices.
enum class XConstraint {
  hermitian,
  skew_hermitian,
  scalar_shift_im,  ///< X = H + i r I, H Hermitian
  scalar_shift_re,  ///< X = S + r I, S skew-Hermitian
  commuting_a,      ///< X* a polynomial in A
  commuting_b,      ///< X a polynomial in B
};

/// PSD block matrix with X in the requested class. One positive-definite
/// diagonal block is drawn first, X inside the class second, and the other
/// diagonal block is completed through the Schur complement, which makes the
/// assembled matrix PSD by construction. `shift` fixes r for the scalar
/// classes (drawn from [-2, 2] when absent).
BlockMatrix random_psd_block(std::size_t n, XConstraint constraint, CounterRng& rng,
                             std::optional<double> shift = std::nullopt);

/// Unconstrained PSD block matrix: a 2n x 2n Wishart sample, block-split.
BlockMatrix random_psd_block(std::size_t n, CounterRng& rng);

/// Valid family data: a_i in [0.5, 3], b_i in [-a_i, 0), |D_ii| in [0.2, 2]
/// with random phase. Both validity flags hold by construction.
FamilySpec random_family(std::size_t n, CounterRng& rng);

/// 2n x 2n matrix [A B; C D] with commuting A, C: either both diagonal or
/// both low-degree polynomials in one common random matrix.
ComplexMatrix random_commuting_quad(std::size_t n, bool diagonal_blocks, CounterRng& rng);

}  // namespace blocknorm
