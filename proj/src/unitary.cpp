#include "tlfiber/unitary.hpp"

#include <algorithm>
#include <cmath>

namespace tlfiber {

namespace {

constexpr double kConjugationCheck = 1e-8;

double real_dimension(const Scalar& d) {
  const Complex z = d.to_complex();
  if (z.imag() != 0.0) throw InvalidParameter("d must be real, got " + d.to_string());
  if (std::abs(z.real()) < 2.0)
    throw BadDimension("|d| = " + std::to_string(std::abs(z.real())) + " is below 2");
  return z.real();
}

int sign_of(double d) { return d < 0 ? -1 : 1; }

void require_member(const Matrix& phi, const Scalar& d) {
  if (!gamma_membership(phi, d))
    throw NotInGamma("Phi is not in Gamma_d for d = " + d.to_string());
}

}  // namespace

double SpectralInvariant::abs_dimension() const {
  double s = 0;
  for (double h : values) s += h * h;
  return s;
}

bool gamma_membership(const Matrix& phi, const Scalar& d, double tol) {
  const double dv = real_dimension(d);
  if (!phi.is_square()) throw ShapeMismatch("Phi must be square");
  const Matrix p = phi.embed(Field::Complex);
  Matrix inv;
  try {
    inv = invert(p);
  } catch (const SingularMatrix&) {
    return false;
  }
  const Scalar s = Scalar::from_int(sign_of(dv), Field::Complex);
  if (inv.max_abs_diff(p.conj().scaled(s)) > tol) return false;
  const double tr = (p * p.adjoint()).trace().real_double();
  return std::abs(tr - std::abs(dv)) <= tol;
}

SpectralInvariant spectral_invariant(const Matrix& phi, const Scalar& d) {
  require_member(phi, d);
  const auto polar = polar_decompose(phi);
  SpectralInvariant inv;
  inv.values = hermitian_eigen(polar.positive).values;
  inv.sign = sign_of(real_dimension(d));
  inv.m = static_cast<std::size_t>(std::count_if(
      inv.values.begin(), inv.values.end(), [](double h) { return std::abs(h - 1) <= kUnitWindow; }));
  return inv;
}

bool unitarily_equivalent(const Matrix& phi1, const Matrix& phi2, const Scalar& d,
                          const Tolerance& tol) {
  const auto a = spectral_invariant(phi1, d);
  const auto b = spectral_invariant(phi2, d);
  if (a.values.size() != b.values.size()) return false;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (std::abs(a.values[i] - b.values[i]) > tol.cluster_radius) return false;
  return true;
}

Matrix canonical_phi(std::vector<double> values, int sign) {
  if (sign != 1 && sign != -1) throw InvalidParameter("sign must be +1 or -1");
  for (double h : values)
    if (!(h > 0) || !std::isfinite(h)) throw InvalidList("values must be positive reals");
  if (sign < 0 && values.size() % 2 == 1)
    throw ParityObstruction("sign -1 needs an even dimension, got " + std::to_string(values.size()));

  std::sort(values.begin(), values.end());
  std::size_t ones = 0;
  std::vector<double> large, small;
  for (double h : values) {
    if (std::abs(h - 1) <= kUnitWindow) ++ones;
    else (h > 1 ? large : small).push_back(h);
  }
  // small ascending pairs with large descending
  if (small.size() != large.size()) throw InvalidList("values are not closed under inversion");
  for (std::size_t i = 0; i < large.size(); ++i)
    if (std::abs(small[i] * large[large.size() - 1 - i] - 1) > kUnitWindow)
      throw InvalidList("values are not closed under inversion");

  double abs_d = 0;
  for (double h : values) abs_d += h * h;
  if (abs_d < 2.0) throw BadDimension("|d| = " + std::to_string(abs_d) + " is below 2");

  const Field f = Field::Complex;
  std::vector<Matrix> blocks;
  if (sign > 0) {
    for (std::size_t i = 0; i < ones; ++i) blocks.push_back(Matrix::identity(1, f));
  } else {
    for (std::size_t i = 0; i < ones / 2; ++i) {
      Matrix b(2, 2, f);
      b(0, 1) = Scalar(Complex(-1, 0));
      b(1, 0) = Scalar(Complex(1, 0));
      blocks.push_back(b);
    }
  }
  for (double h : large) {
    Matrix b(2, 2, f);
    b(0, 1) = Scalar(Complex(sign / h, 0));
    b(1, 0) = Scalar(Complex(h, 0));
    blocks.push_back(b);
  }
  Matrix phi = Matrix::block_diagonal(blocks, f);
  if (!gamma_membership(phi, Scalar(Complex(sign * abs_d, 0))))
    throw NumericalFailure("canonical Phi failed the membership check");
  return phi;
}

std::vector<Complex> ConjugationOperator::apply(const std::vector<Complex>& v) const {
  const std::size_t n = unitary.rows();
  if (v.size() != n) throw ShapeMismatch("vector length does not match Phi");
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex s = 0;
    for (std::size_t j = 0; j < n; ++j) s += unitary(i, j).to_complex() * v[j];
    out[i] = std::conj(s);
  }
  return out;
}

ConjugationOperator conjugation_operator(const Matrix& phi, const Scalar& d) {
  require_member(phi, d);
  const auto polar = polar_decompose(phi);
  ConjugationOperator c{polar.unitary, polar.positive, sign_of(real_dimension(d))};
  const std::size_t n = phi.rows();
  const Matrix& u = c.unitary;
  const Matrix s_id = Matrix::identity(n, Field::Complex).scaled(Scalar::from_int(c.sign, Field::Complex));
  if ((u * u.conj()).max_abs_diff(s_id) > kConjugationCheck)
    throw NumericalFailure("U conj(U) differs from s I");
  const double scale = std::max(1.0, c.positive.max_abs());
  if ((c.positive.conj() * u).max_abs_diff(u * invert(c.positive)) > kConjugationCheck * scale)
    throw NumericalFailure("conj(|Phi|) U differs from U |Phi|^-1");
  return c;
}

}  // namespace tlfiber
