#pragma once

#include <cstddef>
#include <vector>

#include "tlfiber/linalg.hpp"

namespace tlfiber {

/// Phi : V -> conj(V) as a complex matrix (column index in V, row index in
/// conj(V)) with sign s = d/|d|.
struct UnitaryForm {
  Matrix phi;
  int sign = 1;

  std::size_t N() const { return phi.rows(); }
};

/// Eigenvalues h_j of |Phi| (ascending), the sign, and m = #{j : |h_j - 1| <= 1e-8}.
struct SpectralInvariant {
  std::vector<double> values;
  int sign = 1;
  std::size_t m = 0;

  /// sum_j h_j^2
  double abs_dimension() const;
};

inline constexpr double kUnitWindow = 1e-8;
inline constexpr double kMembershipTolerance = 1e-9;

/// Phi invertible, max|Phi^-1 - s conj(Phi)| <= tol and |tr(Phi Phi*) - |d|| <= tol.
/// Throws BadDimension when |d| < 2.
bool gamma_membership(const Matrix& phi, const Scalar& d, double tol = kMembershipTolerance);

/// Throws NotInGamma when phi fails membership.
SpectralInvariant spectral_invariant(const Matrix& phi, const Scalar& d);

/// Invariants agree as multisets within cluster_radius.
bool unitarily_equivalent(const Matrix& phi1, const Matrix& phi2, const Scalar& d,
                          const Tolerance& tol = {});

/// Block-diagonal Phi: blocks [1] (s = +1) or [[0,-1],[1,0]] (s = -1) for the
/// values at 1, then [[0, s/h], [h, 0]] for each pair {h, 1/h} with h > 1 in
/// ascending order. Throws InvalidList, ParityObstruction, BadDimension.
Matrix canonical_phi(std::vector<double> values, int sign);

/// The polar factors of Phi = U |Phi|. The antiunitary C v = conj(U v)
/// squares to s and exchanges the eigenspaces of |Phi| at h and 1/h;
/// construction checks U conj(U) = s I and conj(|Phi|) U = U |Phi|^-1.
struct ConjugationOperator {
  Matrix unitary;
  Matrix positive;
  int sign = 1;

  std::vector<Complex> apply(const std::vector<Complex>& v) const;
};

ConjugationOperator conjugation_operator(const Matrix& phi, const Scalar& d);

}  // namespace tlfiber
