#include <cmath>

#include <doctest.h>

#include "blocknorm/counterexamples.hpp"
#include "blocknorm/errors.hpp"
#include "blocknorm/inequalities.hpp"
#include "blocknorm/sampling.hpp"
#include "blocknorm/spectral.hpp"
#include "test_util.hpp"

using namespace blocknorm;
using testutil::matrix_close;

namespace {
const Complex kI(0.0, 1.0);
}

TEST_SUITE_BEGIN("inequalities");

TEST_CASE("main inequality fails on the stock counterexamples") {
  const auto t_report = check_main_inequality(counterexample_T());
  CHECK_FALSE(t_report.holds);
  REQUIRE(t_report.first_violation.has_value());
  CHECK(*t_report.first_violation == 1);
  CHECK(t_report.margins[0] == doctest::Approx(-0.7).epsilon(1e-12));
  CHECK(t_report.hypothesis == Hypothesis::none);

  const auto ny_report = check_main_inequality(counterexample_Ny(0.5));
  CHECK_FALSE(ny_report.holds);
  CHECK(ny_report.margins[0] == doctest::Approx(-1.0).epsilon(1e-12));  // 3 vs 4
}

TEST_CASE("main inequality holds for Hermitian coupling") {
  for (std::uint64_t trial = 0; trial < 25; ++trial) {
    CounterRng rng(4001, trial);
    const auto m = random_psd_block(1 + trial % 6, XConstraint::hermitian, rng);
    const auto report = check_main_inequality(m);
    CHECK(report.holds);
    CHECK(report.hypothesis == Hypothesis::hermitian_x);
  }
}

TEST_CASE("soundness sweep: 500 PSD samples in each hypothesis class") {
  const XConstraint classes[] = {XConstraint::hermitian,       XConstraint::skew_hermitian,
                                 XConstraint::scalar_shift_im, XConstraint::scalar_shift_re,
                                 XConstraint::commuting_a};
  for (int c = 0; c < 5; ++c) {
    int violations = 0;
    for (std::uint64_t trial = 0; trial < 500; ++trial) {
      CounterRng rng(4100 + c, trial);
      const auto m = random_psd_block(1 + trial % 6, classes[c], rng);
      if (!check_main_inequality(m, 1e-8).holds) ++violations;
    }
    CHECK(violations == 0);
  }
}

TEST_CASE("classification priority and recovery") {
  CounterRng rng(4002);
  const auto h = random_hermitian(3, rng);
  const auto a = random_psd(3, rng) + ComplexMatrix::identity(3);
  const auto m_herm = BlockMatrix::from_blocks(a, h, a);
  CHECK(classify(m_herm) == Hypothesis::hermitian_x);

  const auto m_skew = BlockMatrix::from_blocks(a, h * kI, a);
  CHECK(classify(m_skew) == Hypothesis::skew_hermitian_x);

  const auto shifted = h + ComplexMatrix::identity(3) * (kI * 0.7);
  const auto m_shift = BlockMatrix::from_blocks(a, shifted, a);
  CHECK(classify(m_shift) == Hypothesis::scalar_shift_im);
  const auto s = scalar_shift_check(shifted);
  REQUIRE(s.has_value());
  CHECK(s->mode == PartMode::im);
  CHECK(s->r == doctest::Approx(0.7).epsilon(1e-13));

  CHECK(classify(counterexample_T()) == Hypothesis::none);
}

TEST_CASE("classification is stable under positive scaling") {
  for (std::uint64_t trial = 0; trial < 12; ++trial) {
    CounterRng rng(4003, trial);
    const auto constraint = static_cast<XConstraint>(trial % 6);
    const auto m = random_psd_block(2 + trial % 3, constraint, rng);
    const auto tag = classify(m);
    for (const double scale : {0.5, 3.0, 50.0}) {
      const auto scaled = BlockMatrix::from_blocks(m.a() * Complex(scale),
                                                   m.x() * Complex(scale),
                                                   m.b() * Complex(scale));
      CHECK(classify(scaled) == tag);
    }
  }
}

TEST_CASE("commutes") {
  CounterRng rng(4004);
  std::vector<double> d1{1.0, 2.0, 3.0}, d2{-1.0, 0.5, 4.0};
  CHECK(commutes(ComplexMatrix::diag(std::span<const double>(d1)),
                 ComplexMatrix::diag(std::span<const double>(d2))));

  const auto a = ComplexMatrix::from_rows({{0.3, 0.0}, {0.0, 5.0}});
  const auto xadj = ComplexMatrix::from_rows({{0.0, -kI}, {-kI / 11.0, 0.0}});
  CHECK_FALSE(commutes(a, xadj));

  const auto p = random_matrix(3, 3, rng);
  const auto poly = p * p + p * Complex(2.0) + ComplexMatrix::identity(3);
  CHECK(commutes(p, poly));
  CHECK_THROWS_AS(commutes(p, ComplexMatrix(2, 2)), DimensionMismatch);
}

TEST_CASE("reduction certificate for diagonal commuting coupling") {
  std::vector<double> da{1.0, 2.0}, db{2.0, 3.0};
  const std::vector<Complex> dx{-kI, -2.0 * kI};
  const auto m = BlockMatrix::from_blocks(ComplexMatrix::diag(std::span<const double>(da)),
                                          ComplexMatrix::diag(std::span<const Complex>(dx)),
                                          ComplexMatrix::diag(std::span<const double>(db)));
  REQUIRE(is_psd(m.assemble()).psd);
  const auto cert = reduce_offdiag_to_hermitian(m);
  REQUIRE(cert.has_value());
  std::vector<double> expected{1.0, 2.0};
  CHECK(matrix_close(cert->reduced.x(), ComplexMatrix::diag(std::span<const double>(expected)),
                     1e-12));
  CHECK(is_unitary(cert->w, 1e-10));
  CHECK(frobenius_norm(cert->w.adjoint() * m.assemble() * cert->w -
                       cert->reduced.assemble()) <= 1e-10);
}

TEST_CASE("reduction is the identity for Hermitian PSD coupling") {
  CounterRng rng(4005);
  const auto x = random_psd(2, rng);
  // A commutes with X: take a polynomial in X, shifted to be PD.
  const auto a = hermitized(x * x + x * Complex(2.0)) + ComplexMatrix::identity(2) * Complex(9.0);
  const auto b = hermitized(x * ComplexMatrix::identity(2) * x) +
                 ComplexMatrix::identity(2) * Complex(9.0);
  const auto m = BlockMatrix::from_blocks(a, x, b);
  REQUIRE(is_psd(m.assemble()).psd);
  const auto cert = reduce_offdiag_to_hermitian(m);
  REQUIRE(cert.has_value());
  CHECK(matrix_close(cert->w, ComplexMatrix::identity(4), 1e-9));
  CHECK(matrix_close(cert->reduced.assemble(), m.assemble(), 1e-9));
}

TEST_CASE("reduction declines when nothing commutes, rejects non-PSD") {
  CHECK_FALSE(reduce_offdiag_to_hermitian(counterexample_T()).has_value());
  const FamilySpec spec{{1.0}, {-1.0}, {Complex(1.0)}};
  CHECK_THROWS_AS(reduce_offdiag_to_hermitian(build_family(spec)), NotPsd);
}

TEST_CASE("reduction certificate preserves the spectrum, both sides") {
  for (std::uint64_t trial = 0; trial < 16; ++trial) {
    CounterRng rng(4006, trial);
    const auto side = trial % 2 == 0 ? XConstraint::commuting_a : XConstraint::commuting_b;
    const auto m = random_psd_block(1 + trial % 4, side, rng);
    const auto cert = reduce_offdiag_to_hermitian(m);
    REQUIRE(cert.has_value());
    CHECK(hermitian_residual(cert->reduced.x()) <= 1e-10);
    const auto congruent = cert->w.adjoint() * m.assemble() * cert->w;
    CHECK(frobenius_norm(congruent - cert->reduced.assemble()) <=
          1e-9 * std::max(1.0, frobenius_norm(m.assemble())));
    const auto before = herm_eig(m.assemble()).eigenvalues;
    const auto after = herm_eig(hermitized(congruent)).eigenvalues;
    for (std::size_t i = 0; i < before.size(); ++i) {
      CHECK(std::abs(before[i] - after[i]) <= 1e-9 * std::max(1.0, std::abs(before[i])));
    }
    CHECK(check_main_inequality(m).holds);
  }
}

TEST_CASE("commutation transfers to the adjoint") {
  for (std::uint64_t trial = 0; trial < 10; ++trial) {
    CounterRng rng(4007, trial);
    const auto a = random_hermitian(3, rng);
    const ComplexMatrix x = trial % 2 == 0
                                ? ComplexMatrix(a * a * rng.cgauss() + a * rng.cgauss())
                                : random_matrix(3, 3, rng);
    CHECK(commutes(x, a) == commutes(x.adjoint(), a));
  }
}

TEST_CASE("scalar shift detection") {
  const auto id = ComplexMatrix::identity(3);
  auto s = scalar_shift_check(id * kI);
  REQUIRE(s.has_value());
  CHECK(s->mode == PartMode::im);
  CHECK(s->r == doctest::Approx(1.0));

  CounterRng rng(4008);
  s = scalar_shift_check(random_hermitian(3, rng));
  REQUIRE(s.has_value());
  CHECK(s->mode == PartMode::im);
  CHECK(s->r == doctest::Approx(0.0));

  const auto xt = ComplexMatrix::from_rows({{0.0, kI / 11.0}, {kI, 0.0}});
  CHECK_FALSE(scalar_shift_check(xt).has_value());
}

TEST_CASE("scalar-shift inequality with per-rung equality") {
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    CounterRng rng(4009, trial);
    const auto constraint =
        trial % 2 == 0 ? XConstraint::scalar_shift_im : XConstraint::scalar_shift_re;
    const double r = -2.0 + 4.0 * static_cast<double>(trial) / 19.0;
    const std::size_t n = 2 + trial % 5;  // at n = 1 every 1x1 part is scalar
    const auto m = random_psd_block(n, constraint, rng, r);
    const auto report = check_scalar_shift_inequality(m);
    CHECK(report.inequality.holds);
    CHECK(report.shift.mode == (trial % 2 == 0 ? PartMode::im : PartMode::re));
    CHECK(report.shift.r == doctest::Approx(r).epsilon(1e-10));
    const double scale = 1e-9 * trace_norm(m.sum_ab());
    for (double residual : report.equality_residuals) {
      CHECK(residual <= std::max(scale, 1e-12));
    }
  }
}

TEST_CASE("scalar-shift equality in the degenerate X = 0 case") {
  CounterRng rng(4010);
  const auto a = random_psd(3, rng);
  const auto b = random_psd(3, rng);
  const auto m = BlockMatrix::from_blocks(a, ComplexMatrix(3, 3), b);
  const auto report = check_scalar_shift_inequality(m);
  CHECK(report.inequality.holds);
  CHECK(report.shift.r == 0.0);
  for (double residual : report.equality_residuals) CHECK(residual <= 1e-12);
}

TEST_CASE("scalar-shift checker rejects off-hypothesis input") {
  CHECK_THROWS_AS(check_scalar_shift_inequality(counterexample_T()), HypothesisNotMet);
  const FamilySpec spec{{1.0}, {-1.0}, {Complex(0.0)}};
  CHECK_THROWS_AS(check_scalar_shift_inequality(build_family(spec)), HypothesisNotMet);
}

TEST_CASE("factor-two bound on pinned inputs") {
  const auto t_report = factor_two_bound(counterexample_T());
  CHECK(t_report.holds);
  CHECK(t_report.margins[0] == doctest::Approx(2.0 * 5.3 - 6.0).epsilon(1e-12));

  const auto id = ComplexMatrix::identity(3);
  const auto m = BlockMatrix::from_blocks(id, ComplexMatrix(3, 3), id);
  const auto report = factor_two_bound(m);
  CHECK(report.holds);
  CHECK(report.strict);

  const FamilySpec spec{{1.0}, {-1.0}, {Complex(1.0)}};
  CHECK_THROWS_AS(factor_two_bound(build_family(spec)), NotPsd);
}

TEST_CASE("factor-two bound never fails on PSD samples; strict on PD ones") {
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    CounterRng rng(4011, trial);
    const std::size_t n = 1 + trial % 6;
    const auto m = random_psd_block(n, rng);
    const auto report = factor_two_bound(m);
    CHECK(report.holds);
    if (herm_eig(m.assemble()).eigenvalues.back() > 1e-6) {
      CHECK(report.strict);
      CHECK(report.min_margin > 0.0);
    }
  }
}

TEST_SUITE_END();
