#include "blocknorm/sampling.hpp"

#include <cmath>
#include <numbers>

#include "blocknorm/errors.hpp"
#include "blocknorm/spectral.hpp"

namespace blocknorm {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Inverse of a positive definite Hermitian matrix through its spectrum.
ComplexMatrix pd_inverse(const ComplexMatrix& a) {
  const SpectralData eig = herm_eig(a);
  std::vector<double> inv(eig.eigenvalues.size());
  for (std::size_t i = 0; i < inv.size(); ++i) inv[i] = 1.0 / eig.eigenvalues[i];
  const ComplexMatrix d = ComplexMatrix::diag(std::span<const double>(inv));
  return hermitized(eig.eigenvectors * d * eig.eigenvectors.adjoint());
}

// c0 I + c1 K + c2 K^2 with Gaussian complex coefficients.
ComplexMatrix random_poly_of(const ComplexMatrix& k, CounterRng& rng) {
  ComplexMatrix out = ComplexMatrix::identity(k.rows()) * rng.cgauss();
  out += k * rng.cgauss();
  out += (k * k) * rng.cgauss();
  return out;
}

// Polynomial in K with the argument normalized and the draw rejected until
// the result is well conditioned. Keeps the Schur-constructed corpus at desk
// scale; an unconditioned polynomial occasionally lands near-singular, where
// the polar factor loses digits.
ComplexMatrix conditioned_poly_of(const ComplexMatrix& k, CounterRng& rng) {
  const ComplexMatrix scaled = k * Complex(1.0 / std::max(1.0, frobenius_norm(k)));
  for (;;) {
    const ComplexMatrix out = random_poly_of(scaled, rng);
    const auto sv = svd(out).singular_values;
    if (sv.back() >= 1e-2 * sv.front()) return out;
  }
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) {
  state_ = seed + 0xda942042e4dd58b5ULL * (stream + 1);
  (void)splitmix64(state_);  // decorrelate nearby keys
}

std::uint64_t CounterRng::next_u64() { return splitmix64(state_); }

double CounterRng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double CounterRng::gauss() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

Complex CounterRng::cgauss() {
  const double re = gauss();
  const double im = gauss();
  return Complex(re, im);
}

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, CounterRng& rng) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.cgauss();
  return m;
}

ComplexMatrix random_hermitian(std::size_t n, CounterRng& rng) {
  return hermitized(random_matrix(n, n, rng));
}

ComplexMatrix random_unitary(std::size_t n, CounterRng& rng) {
  return polar_right(random_matrix(n, n, rng)).unitary;
}

ComplexMatrix random_psd(std::size_t n, CounterRng& rng) {
  const ComplexMatrix g = random_matrix(n, n, rng);
  return hermitized(g.adjoint() * g);
}

BlockMatrix random_psd_block(std::size_t n, XConstraint constraint, CounterRng& rng,
                             std::optional<double> shift) {
  // First diagonal block: PD with spectrum bounded away from zero.
  ComplexMatrix pd = random_psd(n, rng) + ComplexMatrix::identity(n) * Complex(0.25);

  const double r = shift.value_or(rng.uniform(-2.0, 2.0));
  ComplexMatrix x(n, n);
  switch (constraint) {
    case XConstraint::hermitian:
      x = random_hermitian(n, rng);
      break;
    case XConstraint::skew_hermitian:
      x = random_hermitian(n, rng) * Complex(0.0, 1.0);
      break;
    case XConstraint::scalar_shift_im:
      x = random_hermitian(n, rng) + ComplexMatrix::identity(n) * Complex(0.0, r);
      break;
    case XConstraint::scalar_shift_re:
      x = random_hermitian(n, rng) * Complex(0.0, 1.0) + ComplexMatrix::identity(n) * Complex(r);
      break;
    case XConstraint::commuting_a:
      x = conditioned_poly_of(pd, rng).adjoint();  // X* polynomial in A
      break;
    case XConstraint::commuting_b:
      x = conditioned_poly_of(pd, rng);  // X polynomial in B
      break;
  }

  // Complete the remaining diagonal block so the Schur complement is a
  // random PSD remainder, which certifies the assembled matrix as PSD.
  const ComplexMatrix inv = pd_inverse(pd);
  const ComplexMatrix remainder = random_psd(n, rng);
  if (constraint == XConstraint::commuting_b) {
    // pd plays the role of B here: A = X B^{-1} X* + R.
    const ComplexMatrix a = hermitized(x * inv * x.adjoint() + remainder);
    return BlockMatrix::from_blocks(a, x, pd);
  }
  const ComplexMatrix b = hermitized(x.adjoint() * inv * x + remainder);
  return BlockMatrix::from_blocks(pd, x, b);
}

BlockMatrix random_psd_block(std::size_t n, CounterRng& rng) {
  return BlockMatrix::from_assembled(random_psd(2 * n, rng));
}

FamilySpec random_family(std::size_t n, CounterRng& rng) {
  FamilySpec spec;
  spec.a.resize(n);
  spec.b.resize(n);
  spec.d_diag.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    spec.a[i] = rng.uniform(0.5, 3.0);
    spec.b[i] = -rng.uniform(0.01, 1.0) * spec.a[i];
    const double mag = rng.uniform(0.2, 2.0);
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    spec.d_diag[i] = Complex(mag * std::cos(angle), mag * std::sin(angle));
  }
  return spec;
}

ComplexMatrix random_commuting_quad(std::size_t n, bool diagonal_blocks, CounterRng& rng) {
  ComplexMatrix a(n, n), c(n, n);
  if (diagonal_blocks) {
    for (std::size_t i = 0; i < n; ++i) {
      a(i, i) = rng.cgauss();
      c(i, i) = rng.cgauss();
    }
  } else {
    const ComplexMatrix k = random_matrix(n, n, rng);
    a = random_poly_of(k, rng);
    c = random_poly_of(k, rng);
  }
  ComplexMatrix out(2 * n, 2 * n);
  out.set_block(0, 0, a);
  out.set_block(0, n, random_matrix(n, n, rng));
  out.set_block(n, 0, c);
  out.set_block(n, n, random_matrix(n, n, rng));
  return out;
}

}  // namespace blocknorm
