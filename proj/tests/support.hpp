#pragma once

// Shared fixtures and independent oracles for the test binaries.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "tlfiber/classify.hpp"
#include "tlfiber/diagram.hpp"
#include "tlfiber/fiber.hpp"
#include "tlfiber/hopf.hpp"
#include "tlfiber/linalg.hpp"

namespace testing {

using namespace tlfiber;

inline Scalar q(long num, long den = 1) { return Scalar::rational(num, den); }
inline Scalar cx(double re, double im = 0) { return Scalar(Complex(re, im)); }

inline Matrix M(std::initializer_list<std::initializer_list<const char*>> rows) {
  return Matrix::parse(rows);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }

  Scalar rational(long span = 5, long max_den = 4) {
    return Scalar::rational(integer(-span, span), integer(1, max_den));
  }

  Matrix rational_matrix(std::size_t r, std::size_t c, long span = 5, long max_den = 4) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rational(span, max_den);
    return m;
  }

  /// Rejection-sampled invertible rational matrix.
  Matrix invertible(std::size_t n, long span = 5, long max_den = 4);

  Matrix complex_matrix(std::size_t r, std::size_t c) {
    Matrix m(r, c, Field::Complex);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = cx(real(-1, 1), real(-1, 1));
    return m;
  }

  /// Haar-ish unitary from Gram-Schmidt on a random complex matrix.
  Matrix unitary(std::size_t n);

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// Determinant by cofactor expansion (no elimination).
inline Scalar cofactor_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Scalar::one(m.field());
  if (n == 1) return m(0, 0);
  Scalar total = Scalar::zero(m.field());
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    Matrix minor(n - 1, n - 1, m.field());
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    const Scalar term = m(0, c) * cofactor_det(minor);
    total = c % 2 == 0 ? total + term : total - term;
  }
  return total;
}

inline Matrix Rng::invertible(std::size_t n, long span, long max_den) {
  while (true) {
    Matrix m = rational_matrix(n, n, span, max_den);
    if (!cofactor_det(m).is_zero()) return m;
  }
}

inline Matrix Rng::unitary(std::size_t n) {
  Matrix a = complex_matrix(n, n);
  std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) cols[j][i] = a(i, j).to_complex();
    for (std::size_t k = 0; k < j; ++k) {
      Complex dot = 0;
      for (std::size_t i = 0; i < n; ++i) dot += std::conj(cols[k][i]) * cols[j][i];
      for (std::size_t i = 0; i < n; ++i) cols[j][i] -= dot * cols[k][i];
    }
    double norm = 0;
    for (auto x : cols[j]) norm += std::norm(x);
    norm = std::sqrt(norm);
    for (auto& x : cols[j]) x /= norm;
  }
  Matrix u(n, n, Field::Complex);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u(i, j) = Scalar(cols[j][i]);
  return u;
}

/// Rank by textbook Gaussian elimination with exact division.
inline std::size_t gauss_rank(Matrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      const Scalar f = a(i, c) / a(r, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

inline Matrix jordan_block(const Scalar& z, std::size_t k) {
  Matrix j(k, k, z.field());
  for (std::size_t i = 0; i < k; ++i) {
    j(i, i) = z;
    if (i + 1 < k) j(i, i + 1) = Scalar::one(z.field());
  }
  return j;
}

/// Block-diagonal Jordan matrix realizing mu: an oracle for Jordan data.
inline Matrix jordan_matrix(const MultiplicityFunction& mu) {
  std::vector<Matrix> blocks;
  for (const auto& e : mu.entries())
    for (std::size_t k = 1; k <= e.sizes.size(); ++k)
      for (std::size_t c = 0; c < e.sizes[k - 1]; ++c) blocks.push_back(jordan_block(e.eigenvalue, k));
  return Matrix::block_diagonal(blocks, mu.field());
}

inline MultiplicityFunction mu_of(std::initializer_list<std::pair<Scalar, std::vector<std::size_t>>> list) {
  std::vector<JordanData> data;
  for (const auto& [z, s] : list) data.push_back({z, s});
  return MultiplicityFunction(std::move(data));
}

inline std::size_t catalan(std::size_t n) {
  std::size_t c = 1;
  for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

/// I_left (x) v (x) I_right built with kron: the oracle for elementary maps.
inline Matrix sandwich(std::size_t n, std::size_t left, const Matrix& v, std::size_t right) {
  std::size_t l = 1, r = 1;
  for (std::size_t i = 0; i < left; ++i) l *= n;
  for (std::size_t i = 0; i < right; ++i) r *= n;
  return Matrix::identity(l, v.field()).kron(v).kron(Matrix::identity(r, v.field()));
}

/// Evaluation of a word by explicit Kronecker products, independent of the
/// library's index arithmetic.
inline Matrix oracle_word_map(const BilinearForm& b, const TLWord& w) {
  const std::size_t n = b.N();
  Matrix row(1, n * n, b.field()), col(n * n, 1, b.field());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      row(0, x * n + y) = b.E()(x, y);
      col(x * n + y, 0) = b.D()(x, y);
    }
  std::size_t k = w.source;
  std::size_t dim = 1;
  for (std::size_t i = 0; i < k; ++i) dim *= n;
  Matrix acc = Matrix::identity(dim, b.field());
  for (const auto& l : w.letters) {
    if (l.op == LetterOp::Cap) {
      acc = sandwich(n, l.index - 1, row, k - l.index - 1) * acc;
      k -= 2;
    } else {
      acc = sandwich(n, l.index - 1, col, k - l.index + 1) * acc;
      k += 2;
    }
  }
  return acc;
}

/// Random valid word from `source` with up to `length` letters, staying at
/// most `max_strands` wide.
inline TLWord random_word(Rng& rng, std::size_t source, std::size_t length, std::size_t max_strands) {
  TLWord w{source, {}};
  std::size_t k = source;
  for (std::size_t i = 0; i < length; ++i) {
    const bool can_cap = k >= 2;
    const bool can_cup = k + 2 <= max_strands;
    if (!can_cap && !can_cup) break;
    const bool cap = can_cap && (!can_cup || rng.integer(0, 1) == 0);
    if (cap) {
      w.letters.push_back({LetterOp::Cap, static_cast<std::size_t>(rng.integer(1, static_cast<long>(k) - 1))});
      k -= 2;
    } else {
      w.letters.push_back({LetterOp::Cup, static_cast<std::size_t>(rng.integer(1, static_cast<long>(k) + 1))});
      k += 2;
    }
  }
  return w;
}

/// NCQuadratic over the a,b,c,d = a11,a12,a21,a22 alphabet, written in
/// test code from the printed relation lists.
struct Term {
  Scalar coeff;
  char x, y;
};

inline Generator letter(char c) {
  switch (c) {
    case 'a': return {1, 1};
    case 'b': return {1, 2};
    case 'c': return {2, 1};
    default: return {2, 2};
  }
}

inline NCQuadratic rel(std::initializer_list<Term> terms, const Scalar& rhs) {
  NCQuadratic r(2, rhs.field());
  for (const auto& t : terms) r.add_quadratic(letter(t.x), letter(t.y), t.coeff);
  r.add_constant(-rhs);
  return r;
}

/// ab = q^-1 ba, ac = q^-1 ca, bd = q^-1 db, cd = q^-1 dc, bc = cb,
/// ad - q^-1 bc = da - q bc = 1
inline std::vector<NCQuadratic> printed_slq2(const Scalar& qv) {
  const Scalar one = Scalar::one(qv.field()), zero = Scalar::zero(qv.field()), qi = qv.inverse();
  return {rel({{one, 'a', 'b'}, {-qi, 'b', 'a'}}, zero), rel({{one, 'a', 'c'}, {-qi, 'c', 'a'}}, zero),
          rel({{one, 'b', 'd'}, {-qi, 'd', 'b'}}, zero), rel({{one, 'c', 'd'}, {-qi, 'd', 'c'}}, zero),
          rel({{one, 'b', 'c'}, {-one, 'c', 'b'}}, zero), rel({{one, 'a', 'd'}, {-qi, 'b', 'c'}}, one),
          rel({{one, 'd', 'a'}, {-qv, 'b', 'c'}}, one)};
}

/// The eight printed tau-family relations; `swap_bc` relabels b <-> c.
inline std::vector<NCQuadratic> printed_tau(const Scalar& t, bool swap_bc = false) {
  const Scalar one = Scalar::one(t.field()), zero = Scalar::zero(t.field());
  auto s = [&](char c) { return !swap_bc ? c : c == 'b' ? 'c' : c == 'c' ? 'b' : c; };
  auto r = [&](std::initializer_list<Term> terms, const Scalar& rhs) {
    std::vector<Term> moved;
    for (const auto& x : terms) moved.push_back({x.coeff, s(x.x), s(x.y)});
    NCQuadratic out(2, t.field());
    for (const auto& x : moved) out.add_quadratic(letter(x.x), letter(x.y), x.coeff);
    out.add_constant(-rhs);
    return out;
  };
  return {r({{t, 'a', 'a'}, {-one, 'b', 'a'}, {one, 'a', 'b'}}, t),
          r({{t, 'd', 'd'}, {-one, 'b', 'd'}, {one, 'd', 'b'}}, t),
          r({{t, 'a', 'c'}, {-one, 'b', 'c'}, {one, 'a', 'd'}}, one),
          r({{t, 'd', 'c'}, {-one, 'b', 'c'}, {one, 'd', 'a'}}, one),
          r({{t, 'c', 'a'}, {-one, 'd', 'a'}, {one, 'c', 'b'}}, -one),
          r({{t, 'c', 'd'}, {-one, 'a', 'd'}, {one, 'c', 'b'}}, -one),
          r({{t, 'c', 'c'}, {-one, 'd', 'c'}, {one, 'c', 'd'}}, zero),
          r({{t, 'c', 'c'}, {-one, 'a', 'c'}, {one, 'c', 'a'}}, zero)};
}

/// Admissible multiplicity functions with rational spectrum and total size
/// <= 6, covering pairs {z, 1/z}, paired and unpaired blocks at +-1 up to k = 4.
inline std::vector<MultiplicityFunction> admissible_catalogue() {
  const Scalar one = q(1), m1 = q(-1);
  return {
      mu_of({{q(-3), {1}}, {q(-1, 3), {1}}}),
      mu_of({{m1, {0, 1}}}),
      mu_of({{m1, {2}}}),
      mu_of({{one, {1}}}),
      mu_of({{one, {3}}}),
      mu_of({{one, {0, 2}}}),
      mu_of({{one, {0, 0, 1}}}),
      mu_of({{m1, {0, 0, 0, 1}}}),
      mu_of({{m1, {0, 1}}, {one, {1}}}),
      mu_of({{m1, {0, 1}}, {one, {0, 0, 1}}}),
      mu_of({{m1, {0, 3}}}),
      mu_of({{m1, {2, 1}}}),
      mu_of({{one, {1, 0, 1}}}),
      mu_of({{one, {0, 0, 2}}}),
      mu_of({{m1, {0, 0, 2}}}),
      mu_of({{q(2), {0, 1}}, {q(1, 2), {0, 1}}}),
      mu_of({{q(2), {1}}, {q(1, 2), {1}}, {m1, {0, 1}}}),
      mu_of({{q(2), {0, 0, 1}}, {q(1, 2), {0, 0, 1}}}),
      mu_of({{q(5), {1}}, {q(1, 5), {1}}, {q(-2, 3), {1}}, {q(-3, 2), {1}}, {one, {2}}}),
      mu_of({{q(3), {2}}, {q(1, 3), {2}}, {one, {1}}}),
      mu_of({{m1, {0, 1}}, {one, {2}}}),
      mu_of({{m1, {0, 0, 0, 1}}, {one, {1}}}),
      mu_of({{m1, {2, 0, 0, 1}}}),
  };
}

}  // namespace testing
