// Rotation-based kernels in plain complex<double>: Hermitian eigensolver,
// singular values, polar decomposition.

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tlfiber/linalg.hpp"

namespace tlfiber {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTolerance = 1e-14;

struct Dense {
  std::size_t rows = 0, cols = 0;
  std::vector<Complex> a;

  Dense(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  explicit Dense(const Matrix& m) : Dense(m.rows(), m.cols()) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j).to_complex();
  }
  Complex& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  Complex operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  Matrix to_matrix() const {
    Matrix m(rows, cols, Field::Complex);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar((*this)(i, j));
    return m;
  }
};

// The 2x2 unitary J = D R with D = diag(1, conj(phase)) and R the real
// rotation that diagonalizes [[app, |apq|], [|apq|, aqq]]; J* A J zeroes the
// (p, q) entry of a Hermitian A.
struct Rotation {
  double c = 1, s = 0;
  Complex phase = 1;

  static Rotation annihilating(double app, double aqq, Complex apq) {
    Rotation r;
    const double mag = std::abs(apq);
    r.phase = apq / mag;
    const double theta = (aqq - app) / (2 * mag);
    const double t = theta == 0 ? 1.0
                                : std::copysign(1.0, theta) /
                                      (std::abs(theta) + std::sqrt(theta * theta + 1));
    r.c = 1 / std::sqrt(t * t + 1);
    r.s = t * r.c;
    return r;
  }

  // A <- A J on columns p, q.
  void apply_right(Dense& m, std::size_t p, std::size_t q) const {
    const Complex cp = std::conj(phase);
    for (std::size_t k = 0; k < m.rows; ++k) {
      const Complex x = m(k, p), y = m(k, q);
      m(k, p) = c * x - s * cp * y;
      m(k, q) = s * x + c * cp * y;
    }
  }

  // A <- J* A on rows p, q.
  void apply_left_adjoint(Dense& m, std::size_t p, std::size_t q) const {
    for (std::size_t k = 0; k < m.cols; ++k) {
      const Complex x = m(p, k), y = m(q, k);
      m(p, k) = c * x - s * phase * y;
      m(q, k) = s * x + c * phase * y;
    }
  }
};

double frobenius(const Dense& m) {
  double s = 0;
  for (const auto& x : m.a) s += std::norm(x);
  return std::sqrt(s);
}

double off_diagonal(const Dense& m) {
  double s = 0;
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

}  // namespace

HermitianEigen hermitian_eigen(const Matrix& h) {
  require_kernel_size(h, "hermitian_eigen");
  const std::size_t n = h.rows();
  Dense a(h);
  const double norm = frobenius(a);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > 1e-9 * std::max(norm, 1.0))
        throw InvalidParameter("hermitian_eigen: matrix is not Hermitian");

  Dense v(n, n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal(a) <= kOffDiagonalTolerance * norm) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) == 0.0) continue;
        const auto rot = Rotation::annihilating(a(p, p).real(), a(q, q).real(), a(p, q));
        rot.apply_right(a, p, q);
        rot.apply_left_adjoint(a, p, q);
        a(p, q) = a(q, p) = 0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        rot.apply_right(v, p, q);
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  HermitianEigen out;
  Dense vs(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values.push_back(a(order[k], order[k]).real());
    for (std::size_t i = 0; i < n; ++i) vs(i, k) = v(i, order[k]);
  }
  out.vectors = vs.to_matrix();
  return out;
}

std::vector<double> singular_values(const Matrix& m) {
  Dense a(m);
  const std::size_t n = a.cols;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0, beta = 0;
        Complex gamma = 0;
        for (std::size_t k = 0; k < a.rows; ++k) {
          alpha += std::norm(a(k, p));
          beta += std::norm(a(k, q));
          gamma += std::conj(a(k, p)) * a(k, q);
        }
        if (std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta) || std::abs(gamma) == 0.0)
          continue;
        rotated = true;
        Rotation::annihilating(alpha, beta, gamma).apply_right(a, p, q);
      }
    if (!rotated) break;
  }
  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0;
    for (std::size_t k = 0; k < a.rows; ++k) s += std::norm(a(k, j));
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

PolarDecomposition polar_decompose(const Matrix& m, const Tolerance& tol) {
  require_kernel_size(m, "polar_decompose");
  const Matrix mc = m.embed(Field::Complex);
  const std::size_t n = mc.rows();
  const auto eig = hermitian_eigen(mc.adjoint() * mc);

  std::vector<double> sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = std::sqrt(std::max(eig.values[i], 0.0));
  const double top = n ? sigma.back() : 0.0;
  if (n && (top == 0.0 || sigma.front() <= tol.rank_threshold * top))
    throw NotInvertible("polar_decompose: matrix is singular");

  Dense v(eig.vectors);
  Dense p(n, n), p_inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex x = 0, y = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const Complex w = v(i, k) * std::conj(v(j, k));
        x += w * sigma[k];
        y += w / sigma[k];
      }
      p(i, j) = x;
      p_inv(i, j) = y;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Complex x = 0.5 * (p(i, j) + std::conj(p(j, i)));
      p(i, j) = x;
      p(j, i) = std::conj(x);
    }
  return {mc * p_inv.to_matrix(), p.to_matrix()};
}

}  // namespace tlfiber
