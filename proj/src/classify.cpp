#include "tlfiber/classify.hpp"

#include <algorithm>
#include <functional>

namespace tlfiber {

namespace {

bool near(const Scalar& a, const Scalar& b, double radius) {
  if (radius <= 0 || (is_exact(a.field()) && a.field() == b.field())) return a == b;
  return std::abs(a.to_complex() - b.to_complex()) <= radius;
}

Matrix jordan_block(const Scalar& z, std::size_t k) {
  Matrix j(k, k, z.field());
  for (std::size_t i = 0; i < k; ++i) {
    j(i, i) = z;
    if (i + 1 < k) j(i, i + 1) = Scalar::one(z.field());
  }
  return j;
}

// [[0, I], [Q^-1, 0]]
Matrix gadget(const Matrix& q, const Tolerance& tol) {
  const std::size_t p = q.rows();
  const Matrix q_inv = invert(q, tol);
  Matrix g(2 * p, 2 * p, q.field());
  for (std::size_t i = 0; i < p; ++i) {
    g(i, p + i) = Scalar::one(q.field());
    for (std::size_t j = 0; j < p; ++j) g(p + i, j) = q_inv(i, j);
  }
  return g;
}

bool is_representative(const Scalar& z, double radius) {
  const Complex a = z.to_complex(), b = 1.0 / a;
  if (is_exact(z.field())) return Scalar::canonical_less(z, z.inverse());
  if (a.real() < b.real() - radius) return true;
  if (std::abs(a.real() - b.real()) <= radius) return a.imag() < b.imag();
  return false;
}

// Partitions of t as block-count vectors, more small parts first.
void partitions(std::size_t t, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> counts;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t left) {
    if (left == 0) {
      auto c = counts;
      while (!c.empty() && c.back() == 0) c.pop_back();
      out.push_back(std::move(c));
      return;
    }
    if (k > left) return;
    for (std::size_t c = left / k + 1; c-- > 0;) {
      counts.push_back(c);
      rec(k + 1, left - c * k);
      counts.pop_back();
    }
  };
  rec(1, t);
}

}  // namespace

Matrix theta(const Matrix& e, const Tolerance& tol) {
  return invert(e, tol) * e.transpose();
}

bool equivalent_forms(const Matrix& e1, const Matrix& e2, const Tolerance& tol) {
  if (e1.rows() != e2.rows() || e1.cols() != e2.cols()) return false;
  const auto mu1 = jordan_multiplicities(theta(e1, tol), tol);
  const auto mu2 = jordan_multiplicities(theta(e2, tol), tol);
  if (mu1.field() != mu2.field() || !is_exact(mu1.field()))
    return mu1.equals(mu2, std::max(tol.cluster_radius, 1e-300));
  return mu1 == mu2;
}

bool admissible(const MultiplicityFunction& mu, double radius) {
  for (const auto& e : mu.entries()) {
    const Scalar& z = e.eigenvalue;
    const Field f = z.field();
    const bool plus_one = near(z, Scalar::one(f), radius);
    const bool minus_one = near(z, -Scalar::one(f), radius);
    if (plus_one || minus_one) {
      for (std::size_t k = 1; k <= e.sizes.size(); ++k) {
        const bool constrained = plus_one ? k % 2 == 0 : k % 2 == 1;
        if (constrained && e.sizes[k - 1] % 2 != 0) return false;
      }
      continue;
    }
    const auto* partner = mu.find(z.inverse(), radius);
    if (!partner || *partner != e.sizes) return false;
  }
  return true;
}

Scalar dimension_from_mu(const MultiplicityFunction& mu) {
  Scalar d = Scalar::zero(mu.field());
  for (const auto& e : mu.entries())
    d += e.eigenvalue * Scalar::from_int(static_cast<long>(e.total()), mu.field());
  return d;
}

Matrix gamma_block(std::size_t k, Field field) {
  if (k == 0) throw InvalidParameter("gamma_block needs k >= 1");
  if (k == 2) {
    Matrix g(2, 2, field);
    g(0, 0) = g(0, 1) = Scalar::one(field);
    g(1, 0) = -Scalar::one(field);
    return g;
  }
  Matrix g(k, k, field);
  for (std::size_t i = 1; i <= k; ++i) {
    const Scalar s = (k - i) % 2 == 0 ? Scalar::one(field) : -Scalar::one(field);
    g(i - 1, k - i) = s;
    if (i >= 2) g(i - 1, k + 1 - i) = s;
  }
  return g;
}

Matrix canonical_form(const MultiplicityFunction& mu, const Tolerance& tol) {
  const double radius = is_exact(mu.field()) ? 0.0 : tol.cluster_radius;
  if (!admissible(mu, radius))
    throw InadmissibleMultiplicity("mu = " + mu.to_string() + " violates the symmetry or parity conditions");
  const Field f = mu.field();

  std::vector<Matrix> blocks, primitives;
  for (const auto& e : mu.entries()) {
    const Scalar& z = e.eigenvalue;
    const bool unit = near(z, Scalar::one(f), radius) || near(z, -Scalar::one(f), radius);
    if (!unit && !is_representative(z, radius)) continue;

    std::vector<Matrix> q_blocks;
    for (std::size_t k = 1; k <= e.sizes.size(); ++k) {
      const std::size_t count = unit ? e.sizes[k - 1] / 2 : e.sizes[k - 1];
      for (std::size_t c = 0; c < count; ++c) q_blocks.push_back(jordan_block(z, k));
      if (unit && e.sizes[k - 1] % 2 == 1) primitives.push_back(gamma_block(k, f));
    }
    if (!q_blocks.empty()) blocks.push_back(gadget(Matrix::block_diagonal(q_blocks, f), tol));
  }
  blocks.insert(blocks.end(), primitives.begin(), primitives.end());
  Matrix result = Matrix::block_diagonal(blocks, f);

  const auto check = jordan_multiplicities(theta(result, tol), tol);
  if (!(radius > 0 ? check.equals(mu, radius) : check == mu))
    throw NumericalFailure("canonical form has Jordan data " + check.to_string() +
                           ", expected " + mu.to_string());
  return result;
}

std::vector<MultiplicityFunction> enumerate_classes(const Scalar& d, std::size_t N,
                                                    const std::vector<Scalar>& domain_in,
                                                    const Tolerance& tol) {
  const double radius = is_exact(d.field()) ? 0.0 : tol.cluster_radius;
  std::vector<Scalar> domain;
  for (const auto& z : domain_in) {
    if (z.field() != d.field()) throw FieldMismatch("domain and d must share a field");
    if (near(z, Scalar::zero(z.field()), radius))
      throw InvalidParameter("domain contains 0");
    if (std::none_of(domain.begin(), domain.end(), [&](const Scalar& y) { return near(y, z, radius); }))
      domain.push_back(z);
  }
  for (const auto& z : domain) {
    const Scalar inv = z.inverse();
    if (std::none_of(domain.begin(), domain.end(), [&](const Scalar& y) { return near(y, inv, radius); }))
      throw InvalidParameter("domain is not closed under inversion: missing " + inv.to_string());
  }
  std::sort(domain.begin(), domain.end(), Scalar::canonical_less);

  std::vector<std::vector<std::vector<std::size_t>>> parts(N + 1);
  for (std::size_t t = 0; t <= N; ++t) partitions(t, parts[t]);

  std::vector<MultiplicityFunction> out;
  std::vector<JordanData> chosen;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t idx, std::size_t left) {
    if (idx == domain.size()) {
      if (left != 0) return;
      MultiplicityFunction mu(chosen);
      if (!admissible(mu, radius)) return;
      if (!near(dimension_from_mu(mu), d, radius)) return;
      out.push_back(std::move(mu));
      return;
    }
    for (std::size_t t = left + 1; t-- > 0;) {
      for (const auto& p : parts[t]) {
        if (t > 0) chosen.push_back({domain[idx], p});
        rec(idx + 1, left - t);
        if (t > 0) chosen.pop_back();
      }
    }
  };
  rec(0, N);
  return out;
}

}  // namespace tlfiber
