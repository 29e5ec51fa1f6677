#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "blocknorm/block_matrix.hpp"
#include "blocknorm/inequalities.hpp"

namespace blocknorm {

/// Data of the diagonal-block family N = [diag(a) D; D* diag(b)] with
/// nonnegative a_i and negative b_i. Its eigenvalues come in closed form
/// from n decoupled quadratics, which makes the family a certified
/// violation generator for the norm inequality.
struct FamilySpec {
  std::vector<double> a;        ///< a_i >= 0
  std::vector<double> b;        ///< b_i < 0
  std::vector<Complex> d_diag;  ///< diagonal of D

  std::size_t n() const { return a.size(); }
  /// d_i = |D_ii|^2, the diagonal of D*D.
  std::vector<double> d() const;
  /// a_i + b_i >= 0, per index.
  std::vector<bool> sum_ok() const;
  /// a_i b_i - d_i < 0, per index (evaluated literally, not simplified).
  std::vector<bool> prod_ok() const;
  bool valid() const;
};

/// Root pairs (x_i, y_i), x_i >= y_i, of mu^2 - (a_i+b_i) mu + (a_i b_i - d_i).
/// Their union over i is exactly the spectrum of the assembled family.
struct QuadraticRoots {
  std::vector<std::pair<double, double>> pairs;
  /// All roots merged and sorted descending.
  std::vector<double> sorted() const;
};

/// Assembles the family; SignViolation if the sign pattern is broken.
BlockMatrix build_family(const FamilySpec& spec);

/// Closed-form eigenvalues via the per-index quadratic formula.
QuadraticRoots family_eigenvalues(const FamilySpec& spec);

/// Confirmation that a valid spec produces the promised violation:
/// neither N nor -N is PSD and ||N||_k exceeds ||(A+B)+0||_k strictly at
/// every rung. HypothesisNotMet when a validity flag fails.
struct ViolationReport {
  bool n_psd = false;
  bool neg_n_psd = false;
  std::vector<double> margins;  ///< margins[k-1] = ||N||_k - ||(A+B)+0||_k
  bool strictly_above = false;  ///< all margins > 0
  bool confirmed = false;
  std::vector<double> eigenvalues;  ///< closed form, descending
};
ViolationReport verify_violation(const FamilySpec& spec);

/// det(M) computed as det(A D - C B) for M = [A B; C D] with commuting A, C.
/// BlocksDoNotCommute when the left blocks fail the commutation test.
Complex det_commuting_blocks(const ComplexMatrix& m, double tolerance = tol::classify);

/// The 4x4 PSD matrix with entries 3/10, i/11, 5, i whose spectral norm
/// exceeds ||A+B||_s: the stock witness that PSD alone is not enough.
BlockMatrix counterexample_T();

/// The real 4x4 family with entries 2, y, 1, 2: PSD for y >= 0 yet violating
/// the inequality, with eigenvalues {4, 1, y, 0}.
BlockMatrix counterexample_Ny(double y);

/// One accepted violator from a randomized search.
struct SearchHit {
  BlockMatrix matrix;
  bool from_corpus = false;
  std::size_t index = 0;  ///< corpus position or trial number
  std::vector<double> margins;
  std::size_t first_violation = 0;
};

struct SearchResult {
  std::vector<SearchHit> hits;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
};

/// Samples 2n x 2n Wishart matrices G*G (one counter-keyed stream per trial,
/// so the outcome depends only on (seed, trial)) and keeps the PSD ones that
/// violate the main inequality. Matrices in `corpus` are screened first.
/// Every hit is cross-checked to classify as `none`.
SearchResult search_psd_violations(std::size_t n, std::size_t trials, std::uint64_t seed,
                                   std::span<const BlockMatrix> corpus = {});

}  // namespace blocknorm
