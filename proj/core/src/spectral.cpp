#include "blocknorm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "blocknorm/errors.hpp"

namespace blocknorm {

namespace {

double offdiag_norm(const ComplexMatrix& a) {
  double s = 0.0;
  const std::size_t n = a.rows();
  for (std::size_t p = 0; p + 1 < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) s += std::norm(a(p, q));
  return std::sqrt(2.0 * s);
}

// One complex Jacobi rotation G = [c, sigma; -conj(sigma), c] on the (p, q)
// plane, chosen to annihilate a(p, q). Applies A <- G* A G and V <- V G.
void rotate_pq(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  const double sign = theta >= 0.0 ? 1.0 : -1.0;
  const double t = sign / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const Complex sigma = t * c * phase;
  const std::size_t n = a.rows();

  // columns p, q of A (right factor G)
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - std::conj(sigma) * akq;
    a(k, q) = sigma * akp + c * akq;
  }
  // rows p, q of A (left factor G*)
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - sigma * aqk;
    a(q, k) = std::conj(sigma) * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = Complex(a(p, p).real(), 0.0);
  a(q, q) = Complex(a(q, q).real(), 0.0);

  for (std::size_t k = 0; k < v.rows(); ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - std::conj(sigma) * vkq;
    v(k, q) = sigma * vkp + c * vkq;
  }
}

// Candidate-based orthonormal completion: fills every column index in `slots`
// of u with unit vectors orthogonal to all currently valid columns.
void complete_columns(ComplexMatrix& u, const std::vector<std::size_t>& slots,
                      std::vector<bool>& valid) {
  const std::size_t n = u.rows();
  for (std::size_t slot : slots) {
    // pick the standard basis vector with the largest residual
    std::size_t best = 0;
    double best_norm = -1.0;
    std::vector<Complex> best_resid(n);
    std::vector<Complex> resid(n);
    for (std::size_t cand = 0; cand < n; ++cand) {
      std::fill(resid.begin(), resid.end(), Complex(0.0));
      resid[cand] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < u.cols(); ++j) {
          if (!valid[j]) continue;
          Complex proj = 0.0;
          for (std::size_t i = 0; i < n; ++i) proj += std::conj(u(i, j)) * resid[i];
          for (std::size_t i = 0; i < n; ++i) resid[i] -= proj * u(i, j);
        }
      }
      double norm2 = 0.0;
      for (const auto& r : resid) norm2 += std::norm(r);
      if (norm2 > best_norm) {
        best_norm = norm2;
        best = cand;
        best_resid = resid;
      }
    }
    (void)best;
    const double inv = 1.0 / std::sqrt(best_norm);
    for (std::size_t i = 0; i < n; ++i) u(i, slot) = best_resid[i] * inv;
    valid[slot] = true;
  }
}

}  // namespace

SpectralData herm_eig(const ComplexMatrix& h) {
  if (!h.square()) throw DimensionMismatch("herm_eig: matrix must be square");
  const double hnorm = frobenius_norm(h);
  if (!(hermitian_residual(h) <= tol::hermiticity * std::max(1.0, hnorm))) {
    throw NonHermitianInput("herm_eig: input exceeds Hermitian tolerance");
  }

  const std::size_t n = h.rows();
  ComplexMatrix a = hermitized(h);
  ComplexMatrix v = ComplexMatrix::identity(n);

  bool converged = false;
  for (int sweep = 0; sweep < tol::jacobi_max_sweeps; ++sweep) {
    if (offdiag_norm(a) <= tol::jacobi_offdiag * hnorm) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate_pq(a, v, p, q);
  }
  if (!converged && !(offdiag_norm(a) <= tol::jacobi_offdiag * hnorm)) {
    throw NoConvergence("herm_eig: Jacobi sweep limit exceeded");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  SpectralData out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

SvdResult svd(const ComplexMatrix& x) {
  if (!all_finite(x)) throw NonHermitianInput("svd: input has non-finite entries");
  if (x.rows() < x.cols()) {
    SvdResult t = svd(x.adjoint());
    return SvdResult{std::move(t.v), std::move(t.singular_values), std::move(t.u)};
  }
  const std::size_t r = x.rows();
  const std::size_t c = x.cols();

  const SpectralData eig = herm_eig(hermitized(x.adjoint() * x));
  std::vector<double> sigma(c);
  for (std::size_t j = 0; j < c; ++j) sigma[j] = std::sqrt(std::max(eig.eigenvalues[j], 0.0));
  const double sigma_max = c > 0 ? sigma.front() : 0.0;
  for (double& s : sigma) {
    if (s <= tol::sv_negligible * sigma_max) s = 0.0;
  }

  ComplexMatrix u(r, r);
  std::vector<bool> valid(r, false);
  std::vector<std::size_t> deficient;
  for (std::size_t j = 0; j < r; ++j) {
    if (j < c && sigma[j] > 0.0) {
      double norm2 = 0.0;
      for (std::size_t i = 0; i < r; ++i) {
        Complex s = 0.0;
        for (std::size_t k = 0; k < c; ++k) s += x(i, k) * eig.eigenvectors(k, j);
        u(i, j) = s / sigma[j];
        norm2 += std::norm(u(i, j));
      }
      const double inv = 1.0 / std::sqrt(norm2);
      for (std::size_t i = 0; i < r; ++i) u(i, j) *= inv;
      valid[j] = true;
    } else {
      deficient.push_back(j);
    }
  }
  complete_columns(u, deficient, valid);

  return SvdResult{std::move(u), std::move(sigma), eig.eigenvectors};
}

PolarFactors polar_right(const ComplexMatrix& x) {
  if (!x.square()) throw DimensionMismatch("polar_right: matrix must be square");
  const SvdResult s = svd(x);
  const ComplexMatrix sv = ComplexMatrix::diag(std::span<const double>(s.singular_values));
  PolarFactors out;
  out.unitary = s.u * s.v.adjoint();
  out.modulus = hermitized(s.v * sv * s.v.adjoint());
  return out;
}

PsdCheck is_psd(const ComplexMatrix& h, double tolerance) {
  const SpectralData eig = herm_eig(h);
  const double lambda_min = eig.eigenvalues.back();
  const double spectral = std::max(std::abs(eig.eigenvalues.front()), std::abs(lambda_min));
  return PsdCheck{lambda_min >= -tolerance * std::max(1.0, spectral), lambda_min};
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& h) {
  const SpectralData eig = herm_eig(h);
  const double lambda_min = eig.eigenvalues.back();
  const double spectral = std::max(std::abs(eig.eigenvalues.front()), std::abs(lambda_min));
  if (!(lambda_min >= -tol::psd * std::max(1.0, spectral))) {
    throw NotPsd("matrix_sqrt_psd: input is not positive semi-definite");
  }
  const std::size_t n = h.rows();
  std::vector<double> root(n);
  for (std::size_t i = 0; i < n; ++i) root[i] = std::sqrt(std::max(eig.eigenvalues[i], 0.0));
  const ComplexMatrix d = ComplexMatrix::diag(std::span<const double>(root));
  return hermitized(eig.eigenvectors * d * eig.eigenvectors.adjoint());
}

Complex det(const ComplexMatrix& m) {
  if (!m.square()) throw DimensionMismatch("det: matrix must be square");
  ComplexMatrix a = m;
  const std::size_t n = a.rows();
  Complex result = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        pivot = i;
      }
    }
    if (best == 0.0) return Complex(0.0);
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      result = -result;
    }
    result *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = a(i, k) / a(k, k);
      if (f == Complex(0.0)) continue;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return result;
}

bool is_unitary(const ComplexMatrix& u, double tolerance) {
  if (!u.square()) return false;
  return frobenius_norm(u.adjoint() * u - ComplexMatrix::identity(u.rows())) <= tolerance;
}

}  // namespace blocknorm
