#pragma once

#include <vector>

#include "blocknorm/complex_matrix.hpp"
#include "blocknorm/tolerances.hpp"

namespace blocknorm {

/// Eigendecomposition of a Hermitian matrix: H = V diag(eigenvalues) V*.
struct SpectralData {
  std::vector<double> eigenvalues;  ///< sorted descending
  ComplexMatrix eigenvectors;       ///< unitary; column i pairs with eigenvalues[i]
};

/// Full decomposition m = u * Sigma * v^* with u (rows x rows) and
/// v (cols x cols) unitary and Sigma the rectangular diagonal of
/// singular_values (min(rows, cols) of them, descending).
struct SvdResult {
  ComplexMatrix u;
  std::vector<double> singular_values;
  ComplexMatrix v;
};

/// Right polar decomposition X = unitary * modulus, modulus = (X*X)^{1/2}.
struct PolarFactors {
  ComplexMatrix unitary;
  ComplexMatrix modulus;
};

/// Outcome of a semi-definiteness test together with its witness.
struct PsdCheck {
  bool psd = false;
  double lambda_min = 0.0;
};

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
///
/// Convergence: off-diagonal Frobenius mass <= tol::jacobi_offdiag * ||H||_F,
/// with a hard cap of tol::jacobi_max_sweeps sweeps (NoConvergence beyond it).
/// Inputs whose Hermitian residual exceeds the admission tolerance are
/// rejected with NonHermitianInput, never symmetrized.
SpectralData herm_eig(const ComplexMatrix& h);

/// Singular value decomposition via herm_eig of X*X (or XX* when wider than
/// tall) with column recovery; columns belonging to negligible singular
/// values are filled in by orthonormal completion.
SvdResult svd(const ComplexMatrix& x);

/// Right polar factors of a square matrix. For singular X the unitary factor
/// is completed on the null space; only reconstruction is promised.
PolarFactors polar_right(const ComplexMatrix& x);

/// True iff lambda_min(H) >= -tol * max(1, ||H||_s). Requires Hermitian input.
PsdCheck is_psd(const ComplexMatrix& h, double tolerance = tol::psd);

/// Hermitian PSD square root S with S*S = H.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& h);

/// Determinant via LU with partial pivoting. Singular input returns ~0.
Complex det(const ComplexMatrix& m);

/// ||U*U - I||_F <= tolerance (absolute).
bool is_unitary(const ComplexMatrix& u, double tolerance = tol::unitarity);

}  // namespace blocknorm
