#include <algorithm>
#include <limits>
#include <cmath>
#include <numeric>

#include "tlfiber/linalg.hpp"

namespace tlfiber {

namespace {

constexpr int kRootIterations = 500;
constexpr double kRootConvergence = 1e-13;

Field poly_field(const Polynomial& p) {
  return p.empty() ? Field::Rational : p.front().field();
}

void trim(Polynomial& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Scalar evaluate(const Polynomial& p, const Scalar& x) {
  Scalar acc = Scalar::zero(x.field());
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  Polynomial d;
  for (std::size_t k = 1; k < p.size(); ++k)
    d.push_back(p[k] * Scalar::from_int(static_cast<long>(k), p[k].field()));
  trim(d);
  return d;
}

// Quotient and remainder of a / b over the field; b must be nonzero.
std::pair<Polynomial, Polynomial> divmod(Polynomial a, const Polynomial& b) {
  trim(a);
  const Field f = poly_field(b);
  if (a.size() < b.size()) return {Polynomial{}, a};
  Polynomial q(a.size() - b.size() + 1, Scalar::zero(f));
  const Scalar lead_inv = b.back().inverse();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    const Scalar coeff = a[i] * lead_inv;
    const std::size_t shift = i - (b.size() - 1);
    q[shift] = coeff;
    if (!coeff.is_zero())
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= coeff * b[j];
    if (i == 0) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

Polynomial monic_gcd(Polynomial a, Polynomial b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Scalar inv = a.back().inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

// Multiplies through by the lcm of all denominators so every coefficient is
// an integer (Gaussian integer for the complex-rational field).
Polynomial integral_multiple(const Polynomial& p) {
  mpz_class l = 1;
  for (const auto& c : p) {
    if (c.field() == Field::Rational) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.as_rational().get_den_mpz_t());
    } else {
      const auto& z = c.as_complex_rational();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.re.get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.im.get_den_mpz_t());
    }
  }
  const Scalar scale = Scalar(Rational(l)).embed(poly_field(p));
  Polynomial out;
  for (const auto& c : p) out.push_back(c * scale);
  return out;
}

Rational rounded(double x) {
  return Rational(mpz_class(std::round(x)));
}

// Rational roots of a squarefree exact polynomial. For a root u/v in lowest
// terms v divides the leading coefficient a_n of the integral multiple, so
// a_n * root is an (Gaussian) integer: round the numerical root and verify.
std::vector<Scalar> exact_simple_roots(const Polynomial& squarefree) {
  const Field f = poly_field(squarefree);
  const Polynomial ip = integral_multiple(squarefree);
  std::vector<Complex> approx_coeffs;
  for (const auto& c : ip) approx_coeffs.push_back(c.to_complex());
  const auto approx = polynomial_roots(approx_coeffs);
  const Scalar lead = ip.back();
  const Complex lead_c = lead.to_complex();

  std::vector<Scalar> found;
  for (const Complex& r : approx) {
    const Complex w = lead_c * r;
    const bool gaussian = f == Field::ComplexRational;
    bool hit = false;
    for (int dr = 0; dr <= 2 && !hit; ++dr)
      for (int di = 0; di <= (gaussian ? 2 : 0) && !hit; ++di) {
        const double off_r = dr == 0 ? 0 : (dr == 1 ? 1 : -1);
        const double off_i = di == 0 ? 0 : (di == 1 ? 1 : -1);
        Scalar numer;
        if (gaussian)
          numer = Scalar(ComplexRational{rounded(w.real()) + off_r, rounded(w.imag()) + off_i});
        else
          numer = Scalar(Rational(rounded(w.real()) + off_r));
        const Scalar z = numer / lead;
        if (!evaluate(squarefree, z).is_zero()) continue;
        hit = true;
        if (std::none_of(found.begin(), found.end(), [&](const Scalar& y) { return y == z; }))
          found.push_back(z);
      }
  }
  return found;
}

std::size_t root_multiplicity(Polynomial p, const Scalar& z) {
  const Polynomial linear{-z, Scalar::one(z.field())};
  std::size_t m = 0;
  while (p.size() > 1) {
    auto [q, r] = divmod(p, linear);
    if (!r.empty()) break;
    p = std::move(q);
    ++m;
  }
  return m;
}

std::vector<Eigenvalue> exact_spectrum(const Matrix& m) {
  const Polynomial chi = characteristic_polynomial(m);
  if (chi.size() <= 1) return {};
  const Polynomial g = monic_gcd(chi, derivative(chi));
  const Polynomial squarefree = divmod(chi, g).first;
  const auto roots = exact_simple_roots(squarefree);
  if (roots.size() + 1 != squarefree.size())
    throw IrrationalSpectrum("characteristic polynomial does not split over the " +
                             std::string(field_name(m.field())) + " field");
  std::vector<Eigenvalue> out;
  for (const auto& z : roots) out.push_back({z, root_multiplicity(chi, z)});
  return out;
}

constexpr double kEpsilon = std::numeric_limits<double>::epsilon();

// A cluster of `count` roots around a is a simple root of the (count-1)-th
// derivative, which is far better conditioned than the roots themselves.
Complex polish_center(const std::vector<Complex>& coeffs, Complex start, std::size_t count) {
  if (count < 2) return start;
  std::vector<Complex> d = coeffs;
  for (std::size_t k = 1; k < count && d.size() > 1; ++k) {
    std::vector<Complex> next(d.size() - 1);
    for (std::size_t i = 1; i < d.size(); ++i) next[i - 1] = d[i] * static_cast<double>(i);
    d = std::move(next);
  }
  Complex z = start;
  for (int it = 0; it < 50; ++it) {
    Complex value = 0, slope = 0;
    for (auto c = d.rbegin(); c != d.rend(); ++c) {
      slope = slope * z + value;
      value = value * z + *c;
    }
    if (slope == Complex(0)) break;
    const Complex step = value / slope;
    z -= step;
    if (std::abs(step) <= kEpsilon * std::max(1.0, std::abs(z))) break;
  }
  // a wandering iteration means the cluster was not a genuine multiple root
  return std::abs(z - start) <= std::max(1e-6, 1e-3 * std::abs(start)) ? z : start;
}

// Union-find clustering of numerical roots: a pair joins when closer than the
// cluster radius or when their Weierstrass inclusion disks overlap.
std::vector<Eigenvalue> approximate_spectrum(const Matrix& m, const Tolerance& tol) {
  const Polynomial chi = characteristic_polynomial(m);
  std::vector<Complex> coeffs;
  for (const auto& c : chi) coeffs.push_back(c.to_complex());
  const auto roots = polynomial_roots(coeffs);
  const std::size_t n = roots.size();

  std::vector<double> radius(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    // |p(r)| plus a bound on its rounding error in Horner evaluation
    Complex value = 0;
    double magnitude = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      value = value * roots[i] + *it;
      magnitude = magnitude * std::abs(roots[i]) + std::abs(*it);
    }
    const double residual =
        std::abs(value) + 4.0 * static_cast<double>(n) * kEpsilon * magnitude;
    double denom = std::abs(coeffs.back());
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) denom *= std::abs(roots[i] - roots[j]);
    radius[i] = denom == 0.0 ? 0.0 : static_cast<double>(n) * residual / denom;
  }

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root_of = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dist = std::abs(roots[i] - roots[j]);
      if (dist <= tol.cluster_radius || dist <= radius[i] + radius[j])
        parent[root_of(i)] = root_of(j);
    }

  std::vector<Eigenvalue> out;
  std::vector<std::size_t> seen;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = root_of(i);
    if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
    seen.push_back(r);
    Complex sum = 0;
    std::size_t count = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (root_of(j) == r) {
        sum += roots[j];
        ++count;
      }
    out.push_back({Scalar(polish_center(coeffs, sum / static_cast<double>(count), count)), count});
  }
  return out;
}

}  // namespace

Polynomial characteristic_polynomial(const Matrix& m) {
  require_kernel_size(m, "characteristic_polynomial");
  const Field f = m.field();
  const std::size_t n = m.rows();
  // Coefficients high -> low, grown one leading principal submatrix at a time.
  std::vector<Scalar> vect{Scalar::one(f)};
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Scalar> t(r + 2, Scalar::zero(f));
    t[0] = Scalar::one(f);
    t[1] = -m(r, r);
    // powers: column vector A_r^k C, starting from C.
    std::vector<Scalar> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Scalar dot = Scalar::zero(f);
      for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * col[i];
      t[k + 2] = -dot;
      std::vector<Scalar> next(r, Scalar::zero(f));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * col[j];
      col = std::move(next);
    }
    std::vector<Scalar> updated(r + 2, Scalar::zero(f));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) updated[i] += t[i - j] * vect[j];
    vect = std::move(updated);
  }
  return Polynomial(vect.rbegin(), vect.rend());
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs_in) {
  std::vector<Complex> c = coeffs_in;
  while (!c.empty() && c.back() == Complex(0.0, 0.0)) c.pop_back();
  if (c.size() <= 1) return {};
  const std::size_t n = c.size() - 1;
  const Complex lead = c.back();
  for (auto& x : c) x /= lead;

  // Fujiwara bound for the starting circle.
  double bound = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    double term = std::pow(std::abs(c[n - k]), 1.0 / static_cast<double>(k));
    if (k == n) term = std::pow(std::abs(c[0]) / 2, 1.0 / static_cast<double>(n));
    bound = std::max(bound, term);
  }
  bound = 2 * std::max(bound, 1e-3);

  const double pi = std::acos(-1.0);
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(bound, 2 * pi * static_cast<double>(k) / static_cast<double>(n) + 0.4);

  auto eval = [&](Complex x) {
    Complex acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  };

  for (int iter = 0; iter < kRootIterations; ++iter) {
    double worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex denom = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      if (denom == Complex(0.0, 0.0)) denom = 1e-300;
      const Complex step = eval(z[i]) / denom;
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (worst <= kRootConvergence) break;
  }
  return z;
}

std::vector<Eigenvalue> spectrum(const Matrix& m, const Tolerance& tol) {
  require_kernel_size(m, "spectrum");
  auto out = is_exact(m.field()) ? exact_spectrum(m) : approximate_spectrum(m, tol);
  std::sort(out.begin(), out.end(), [](const Eigenvalue& a, const Eigenvalue& b) {
    return Scalar::canonical_less(a.value, b.value);
  });
  return out;
}

MultiplicityFunction jordan_multiplicities(const Matrix& m, const Tolerance& tol) {
  require_kernel_size(m, "jordan_multiplicities");
  const std::size_t n = m.rows();
  const Field f = m.field();
  const bool exact = is_exact(f);
  const auto eigen = spectrum(m, tol);
  const double norm = exact ? 0.0 : (n ? singular_values(m).front() : 0.0);

  std::vector<JordanData> data;
  for (const auto& [z, alg] : eigen) {
    if (exact ? z.is_zero() : z.abs() <= std::max(tol.cluster_radius, tol.rank_threshold * norm))
      throw NotInvertible("0 is an eigenvalue");
    const Matrix shifted = m - Matrix::identity(n, f).scaled(z);
    const std::size_t floor_rank = n - alg;

    std::vector<long> r{static_cast<long>(n)};
    Matrix power = Matrix::identity(n, f);
    for (std::size_t k = 1; k <= alg + 1; ++k) {
      if (static_cast<std::size_t>(r.back()) == floor_rank) {
        r.push_back(r.back());
        continue;
      }
      power = power * shifted;
      std::size_t rk;
      if (exact) {
        rk = rank(power);
      } else {
        const double cutoff =
            tol.rank_threshold * std::pow(norm + z.abs(), static_cast<double>(k));
        const auto sv = singular_values(power);
        rk = static_cast<std::size_t>(
            std::count_if(sv.begin(), sv.end(), [&](double s) { return s > cutoff; }));
      }
      r.push_back(static_cast<long>(rk));
    }

    JordanData jd{z, {}};
    std::size_t weighted = 0;
    for (std::size_t k = 1; k <= alg; ++k) {
      const long mu = r[k - 1] - 2 * r[k] + r[k + 1];
      if (mu < 0)
        throw NumericalFailure("inconsistent rank sequence at eigenvalue " + z.to_string());
      jd.sizes.push_back(static_cast<std::size_t>(mu));
      weighted += k * static_cast<std::size_t>(mu);
    }
    if (weighted != alg)
      throw NumericalFailure("Jordan block sizes at " + z.to_string() + " sum to " +
                             std::to_string(weighted) + ", algebraic multiplicity is " +
                             std::to_string(alg));
    data.push_back(std::move(jd));
  }
  return MultiplicityFunction(std::move(data));
}

}  // namespace tlfiber
