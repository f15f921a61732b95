#pragma once

#include <cstddef>
#include <vector>

#include "tlfiber/linalg.hpp"
#include "tlfiber/multiplicity.hpp"

namespace tlfiber {

/// Theta(E) = E^-1 tE. Its Jordan data is a complete invariant of the orbit
/// E -> tT E T.
Matrix theta(const Matrix& e, const Tolerance& tol = {});

/// Same size and equal Jordan data of Theta. Approximate eigenvalues are
/// paired within cluster_radius.
bool equivalent_forms(const Matrix& e1, const Matrix& e2, const Tolerance& tol = {});

/// (i) mu(z) = mu(1/z) for z != +-1, (ii) mu^(k)(1) even for even k,
/// (iii) mu^(k)(-1) even for odd k. `radius` matches approximate eigenvalues.
bool admissible(const MultiplicityFunction& mu, double radius = 0);

/// sum_z |mu(z)| z
Scalar dimension_from_mu(const MultiplicityFunction& mu);

/// k x k primitive whose Theta is a single Jordan block J_k((-1)^(k+1)).
/// Gamma_1 = [1], Gamma_2 = [[1,1],[-1,0]]; for k >= 3 row i carries
/// (-1)^(k-i) on the antidiagonal and, for i >= 2, just right of it.
Matrix gamma_block(std::size_t k, Field field = Field::Rational);

/// Block-diagonal representative with Jordan data mu:
///  - each pair {z, 1/z} (z the member first in (re, im) order) becomes
///    [[0, I], [Q^-1, 0]] with Q the Jordan blocks of mu(z), giving
///    Theta = diag(Q, tQ^-1);
///  - at +-1, floor(mu^(k)/2) blocks of size k go into such a Q and an
///    odd leftover becomes gamma_block(k).
/// The result is checked against mu before it is returned.
/// Throws InadmissibleMultiplicity.
Matrix canonical_form(const MultiplicityFunction& mu, const Tolerance& tol = {});

/// All admissible mu supported in `domain` with total size N and
/// dimension_from_mu = d. The domain must omit 0 and be closed under
/// inversion (InvalidParameter otherwise).
std::vector<MultiplicityFunction> enumerate_classes(const Scalar& d, std::size_t N,
                                                    const std::vector<Scalar>& domain,
                                                    const Tolerance& tol = {});

}  // namespace tlfiber
