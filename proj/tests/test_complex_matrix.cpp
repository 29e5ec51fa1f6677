#include <doctest.h>

#include "blocknorm/complex_matrix.hpp"
#include "blocknorm/errors.hpp"
#include "blocknorm/sampling.hpp"
#include "test_util.hpp"

using namespace blocknorm;
using testutil::matrix_close;

TEST_SUITE_BEGIN("complex_matrix");

TEST_CASE("construction validates shape") {
  CHECK_THROWS_AS(ComplexMatrix(0, 3), DimensionMismatch);
  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), DimensionMismatch);
  const ComplexMatrix m(2, 3);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(frobenius_norm(m) == 0.0);
}

TEST_CASE("adjoint conjugates and transposes") {
  const Complex i(0.0, 1.0);
  const auto m = ComplexMatrix::from_rows({{1.0, i}, {2.0 * i, 3.0}});
  const auto a = m.adjoint();
  CHECK(a(0, 1) == Complex(0.0, -2.0));
  CHECK(a(1, 0) == -i);
  CHECK(a(1, 1) == Complex(3.0));
}

TEST_CASE("arithmetic shape checks") {
  const ComplexMatrix a(2, 2), b(2, 3);
  CHECK_THROWS_AS(a + b, DimensionMismatch);
  CHECK_THROWS_AS(b * b, DimensionMismatch);
  CHECK((a * b).cols() == 3);
}

TEST_CASE("hermitian residual and hermitized") {
  const Complex i(0.0, 1.0);
  const auto h = ComplexMatrix::from_rows({{5.0, i}, {-i, 5.0}});
  CHECK(hermitian_residual(h) == 0.0);
  CHECK(is_hermitian(h));
  auto skewed = h;
  skewed(0, 1) += Complex(0.1);
  CHECK_FALSE(is_hermitian(skewed));
  CHECK(is_hermitian(hermitized(skewed)));
}

TEST_CASE("direct sum and block access round-trip") {
  CounterRng rng(7);
  const auto a = random_matrix(2, 2, rng);
  const auto b = random_matrix(3, 3, rng);
  const auto s = direct_sum(a, b);
  CHECK(s.rows() == 5);
  CHECK(matrix_close(s.block(0, 0, 2, 2), a, 0.0));
  CHECK(matrix_close(s.block(2, 2, 3, 3), b, 0.0));
  CHECK(frobenius_norm(s.block(0, 2, 2, 3)) == 0.0);
}

TEST_CASE("block swap is a symmetric permutation") {
  const auto p = block_swap(3);
  CHECK(matrix_close(p * p, ComplexMatrix::identity(6), 0.0));
  CHECK(matrix_close(p.adjoint(), p, 0.0));
}

TEST_CASE("trace and frobenius agree with direct sums") {
  const auto m = ComplexMatrix::from_rows({{Complex(1, 2), 0.0}, {0.0, Complex(3, -2)}});
  CHECK(trace(m) == Complex(4.0, 0.0));
  CHECK(frobenius_norm(m) == doctest::Approx(std::sqrt(1. + 4. + 9. + 4.)).epsilon(1e-15));
}

TEST_SUITE_END();
