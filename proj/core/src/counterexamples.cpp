#include "blocknorm/counterexamples.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "blocknorm/errors.hpp"
#include "blocknorm/norms.hpp"
#include "blocknorm/sampling.hpp"
#include "blocknorm/spectral.hpp"

namespace blocknorm {

std::vector<double> FamilySpec::d() const {
  std::vector<double> out(d_diag.size());
  for (std::size_t i = 0; i < d_diag.size(); ++i) out[i] = std::norm(d_diag[i]);
  return out;
}

std::vector<bool> FamilySpec::sum_ok() const {
  std::vector<bool> out(n());
  for (std::size_t i = 0; i < n(); ++i) out[i] = a[i] + b[i] >= 0.0;
  return out;
}

std::vector<bool> FamilySpec::prod_ok() const {
  const std::vector<double> dd = d();
  std::vector<bool> out(n());
  for (std::size_t i = 0; i < n(); ++i) out[i] = a[i] * b[i] - dd[i] < 0.0;
  return out;
}

bool FamilySpec::valid() const {
  const auto s = sum_ok();
  const auto p = prod_ok();
  return std::all_of(s.begin(), s.end(), std::identity{}) &&
         std::all_of(p.begin(), p.end(), std::identity{});
}

std::vector<double> QuadraticRoots::sorted() const {
  std::vector<double> out;
  out.reserve(2 * pairs.size());
  for (const auto& [x, y] : pairs) {
    out.push_back(x);
    out.push_back(y);
  }
  std::sort(out.begin(), out.end(), std::greater<>{});
  return out;
}

BlockMatrix build_family(const FamilySpec& spec) {
  const std::size_t n = spec.n();
  if (n == 0 || spec.b.size() != n || spec.d_diag.size() != n) {
    throw DimensionMismatch("build_family: a, b, d must have equal positive length");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.a[i] < 0.0) {
      throw SignViolation("build_family: a[" + std::to_string(i) + "] is negative");
    }
    if (spec.b[i] >= 0.0) {
      throw SignViolation("build_family: b[" + std::to_string(i) + "] is not negative");
    }
  }
  return BlockMatrix::from_blocks(ComplexMatrix::diag(std::span<const double>(spec.a)),
                                  ComplexMatrix::diag(std::span<const Complex>(spec.d_diag)),
                                  ComplexMatrix::diag(std::span<const double>(spec.b)));
}

QuadraticRoots family_eigenvalues(const FamilySpec& spec) {
  const std::vector<double> dd = spec.d();
  QuadraticRoots out;
  out.pairs.resize(spec.n());
  for (std::size_t i = 0; i < spec.n(); ++i) {
    const double s = spec.a[i] + spec.b[i];
    // discriminant (a-b)^2 + 4d is a sum of nonnegative terms, so the roots
    // are real and the formula below never cancels catastrophically.
    const double diff = spec.a[i] - spec.b[i];
    const double disc = std::sqrt(diff * diff + 4.0 * dd[i]);
    out.pairs[i] = {0.5 * (s + disc), 0.5 * (s - disc)};
  }
  return out;
}

ViolationReport verify_violation(const FamilySpec& spec) {
  const auto sums = spec.sum_ok();
  const auto prods = spec.prod_ok();
  for (std::size_t i = 0; i < spec.n(); ++i) {
    if (!sums[i]) {
      throw HypothesisNotMet("verify_violation: a[" + std::to_string(i) + "] + b[" +
                             std::to_string(i) + "] < 0");
    }
    if (!prods[i]) {
      throw HypothesisNotMet("verify_violation: a[" + std::to_string(i) + "]*b[" +
                             std::to_string(i) + "] - d[" + std::to_string(i) + "] >= 0");
    }
  }

  const BlockMatrix family = build_family(spec);
  const ComplexMatrix assembled = family.assemble();
  const std::size_t s = 2 * spec.n();

  ViolationReport out;
  out.eigenvalues = family_eigenvalues(spec).sorted();
  out.n_psd = is_psd(assembled).psd;
  out.neg_n_psd = is_psd(-assembled).psd;
  const KyFanProfile prof_n = ky_fan_profile(assembled, s);
  const KyFanProfile prof_sum = ky_fan_profile(family.sum_ab(), s);
  out.margins.resize(s);
  out.strictly_above = true;
  for (std::size_t k = 0; k < s; ++k) {
    out.margins[k] = prof_n.cumsum[k] - prof_sum.cumsum[k];
    if (out.margins[k] <= 0.0) out.strictly_above = false;
  }
  out.confirmed = !out.n_psd && !out.neg_n_psd && out.strictly_above;
  return out;
}

Complex det_commuting_blocks(const ComplexMatrix& m, double tolerance) {
  if (!m.square() || m.rows() % 2 != 0) {
    throw DimensionMismatch("det_commuting_blocks: matrix must be square of even dimension");
  }
  const std::size_t n = m.rows() / 2;
  const ComplexMatrix a = m.block(0, 0, n, n);
  const ComplexMatrix b = m.block(0, n, n, n);
  const ComplexMatrix c = m.block(n, 0, n, n);
  const ComplexMatrix d = m.block(n, n, n, n);
  if (!commutes(a, c, tolerance)) {
    throw BlocksDoNotCommute("det_commuting_blocks: the two left blocks do not commute");
  }
  return det(a * d - c * b);
}

BlockMatrix counterexample_T() {
  const Complex i(0.0, 1.0);
  return BlockMatrix::from_blocks(
      ComplexMatrix::from_rows({{0.3, 0.0}, {0.0, 5.0}}),
      ComplexMatrix::from_rows({{0.0, i / 11.0}, {i, 0.0}}),
      ComplexMatrix::from_rows({{5.0, 0.0}, {0.0, 0.3}}));
}

BlockMatrix counterexample_Ny(double y) {
  return BlockMatrix::from_blocks(
      ComplexMatrix::from_rows({{2.0, 0.0}, {0.0, y}}),
      ComplexMatrix::from_rows({{0.0, 2.0}, {0.0, 0.0}}),
      ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 2.0}}));
}

SearchResult search_psd_violations(std::size_t n, std::size_t trials, std::uint64_t seed,
                                   std::span<const BlockMatrix> corpus) {
  SearchResult out;
  out.trials = trials;
  out.seed = seed;

  const auto consider = [&](const BlockMatrix& m, bool from_corpus, std::size_t index) {
    if (!is_psd(m.assemble()).psd) return;
    const InequalityReport report = check_main_inequality(m);
    if (report.holds) return;
    if (report.hypothesis != Hypothesis::none) {
      throw Error("search_psd_violations: violator matches a hypothesis class; "
                  "kernel inconsistency");
    }
    out.hits.push_back(SearchHit{m, from_corpus, index, report.margins,
                                 report.first_violation.value_or(0)});
  };

  for (std::size_t i = 0; i < corpus.size(); ++i) consider(corpus[i], true, i);
  for (std::size_t t = 0; t < trials; ++t) {
    CounterRng rng(seed, t);
    const ComplexMatrix g = random_matrix(2 * n, 2 * n, rng);
    consider(BlockMatrix::from_assembled(hermitized(g.adjoint() * g)), false, t);
  }
  return out;
}

}  // namespace blocknorm
