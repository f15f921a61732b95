#pragma once

#include <cstddef>
#include <vector>

#include "tlfiber/matrix.hpp"
#include "tlfiber/multiplicity.hpp"

namespace tlfiber {

/// Thresholds for the approximate field. Exact fields ignore both.
struct Tolerance {
  /// Singular values below rank_threshold * sigma_max count as zero.
  double rank_threshold = 1e-10;
  /// Eigenvalues closer than this are grouped into one cluster.
  double cluster_radius = 1e-8;

  static Tolerance exact() { return {0.0, 0.0}; }
};

Matrix invert(const Matrix& m, const Tolerance& tol = {});

/// Exact fields: fraction-free (Bareiss) elimination. Complex: singular value
/// thresholding relative to the largest singular value.
std::size_t rank(const Matrix& m, const Tolerance& tol = {});

/// Reduced row echelon form with zero rows removed. Exact for exact fields;
/// partial pivoting with rank_threshold * max|entry| cutoff otherwise.
Matrix reduced_row_echelon(const Matrix& m, const Tolerance& tol = {});

Scalar determinant(const Matrix& m);

/// A polynomial as coefficients c[0] + c[1] x + ... (all in one field).
using Polynomial = std::vector<Scalar>;

/// det(x I - M) by the division-free Berkowitz recursion.
Polynomial characteristic_polynomial(const Matrix& m);

struct Eigenvalue {
  Scalar value;
  std::size_t multiplicity;
};

/// Exact fields: roots of the characteristic polynomial when it splits over
/// the field (IrrationalSpectrum otherwise). Complex: all roots by
/// simultaneous (Durand-Kerner) iteration, clustered. Sorted by (re, im).
std::vector<Eigenvalue> spectrum(const Matrix& m, const Tolerance& tol = {});

/// mu^(k)(z) = r_{k-1} - 2 r_k + r_{k+1} with r_k = rank((M - zI)^k).
MultiplicityFunction jordan_multiplicities(const Matrix& m, const Tolerance& tol = {});

/// Numerically found roots of a polynomial with complex coefficients.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  Matrix vectors;              // columns, complex field
};

/// Cyclic Jacobi rotations; H must be Hermitian (checked to 1e-9 relative).
HermitianEigen hermitian_eigen(const Matrix& h);

/// Singular values (descending) by one-sided Jacobi rotations.
std::vector<double> singular_values(const Matrix& m);

struct PolarDecomposition {
  Matrix unitary;   // U
  Matrix positive;  // P = (M* M)^{1/2}
};

/// M = U P with U unitary and P positive definite. Runs in the complex field;
/// exact inputs are embedded first.
PolarDecomposition polar_decompose(const Matrix& m, const Tolerance& tol = {});

}  // namespace tlfiber
