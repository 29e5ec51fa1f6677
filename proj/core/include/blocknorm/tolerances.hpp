#pragma once

namespace blocknorm::tol {

// Admission: inputs with ||H - H*||_F above this (relative to max(1, ||H||_F))
// are rejected, never silently symmetrized.
inline constexpr double hermiticity = 1e-10;

// Jacobi sweep termination: off-diagonal Frobenius mass below this fraction
// of ||H||_F counts as converged.
inline constexpr double jacobi_offdiag = 1e-13;
inline constexpr int jacobi_max_sweeps = 60;

// Singular values below this fraction of sigma_max are clamped to zero and
// get their left singular vectors from orthonormal completion instead of
// column recovery. The X*X route cannot resolve singular values below
// sqrt(eps) * sigma_max, so the cut sits just above that noise floor.
inline constexpr double sv_negligible = 1e-7;

// Reconstruction contracts (relative to max(1, ||.||_F)).
inline constexpr double reconstruction = 1e-10;

// Positive semi-definiteness: lambda_min >= -psd * max(1, ||H||_s).
inline constexpr double psd = 1e-8;

// Fan dominance slack, relative to max(1, trace norm of the dominating side).
inline constexpr double dominance = 1e-8;

// lambda_min above this fraction of ||A+B||_s counts as positive definite
// when deciding strictness of the factor-two bound.
inline constexpr double strict_pd = 1e-8;

// Default tolerance for hypothesis classification and commutation checks.
inline constexpr double classify = 1e-8;

inline constexpr double unitarity = 1e-10;

}  // namespace blocknorm::tol
