#include <algorithm>
#include <cmath>
#include <utility>

#include "tlfiber/linalg.hpp"

namespace tlfiber {

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// Fraction-free elimination in place. Returns the rank; `sign` tracks row
// swaps so the determinant of a square input is sign * last pivot.
std::size_t bareiss(Matrix& a, int& sign) {
  const Field f = a.field();
  Scalar prev = Scalar::one(f);
  std::size_t r = 0;
  sign = 1;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      swap_rows(a, r, p);
      sign = -sign;
    }
    const Scalar pivot = a(r, c);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      const Scalar lead = a(i, c);
      for (std::size_t j = c + 1; j < a.cols(); ++j)
        a(i, j) = (pivot * a(i, j) - lead * a(r, j)) / prev;
      a(i, c) = Scalar::zero(f);
    }
    prev = pivot;
    ++r;
  }
  return r;
}

}  // namespace

Matrix invert(const Matrix& m, const Tolerance& tol) {
  require_kernel_size(m, "invert");
  const std::size_t n = m.rows();
  const Field f = m.field();
  const bool exact = is_exact(f);
  const double cutoff = exact ? 0.0 : tol.rank_threshold * m.max_abs();

  Matrix a = m;
  Matrix inv = Matrix::identity(n, f);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    if (exact) {
      while (p < n && a(p, c).is_zero()) ++p;
      if (p == n) throw SingularMatrix("zero pivot in column " + std::to_string(c + 1));
    } else {
      double best = -1;
      for (std::size_t i = c; i < n; ++i)
        if (a(i, c).abs() > best) {
          best = a(i, c).abs();
          p = i;
        }
      if (best <= cutoff || best == 0.0)
        throw SingularMatrix("pivot below rank threshold in column " + std::to_string(c + 1));
    }
    swap_rows(a, c, p);
    swap_rows(inv, c, p);
    const Scalar scale = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= scale;
      inv(c, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      const Scalar factor = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= factor * a(c, j);
        inv(i, j) -= factor * inv(c, j);
      }
    }
  }
  return inv;
}

std::size_t rank(const Matrix& m, const Tolerance& tol) {
  if (m.empty()) return 0;
  if (!is_exact(m.field())) {
    const auto sv = singular_values(m);
    if (sv.empty() || sv.front() == 0.0) return 0;
    const double cutoff = tol.rank_threshold * sv.front();
    return static_cast<std::size_t>(
        std::count_if(sv.begin(), sv.end(), [&](double s) { return s > cutoff; }));
  }
  Matrix a = m;
  int sign = 1;
  return bareiss(a, sign);
}

Scalar determinant(const Matrix& m) {
  require_kernel_size(m, "determinant");
  if (m.rows() == 0) return Scalar::one(m.field());
  if (!is_exact(m.field())) {
    // Partial-pivot LU in floating point.
    Matrix a = m;
    const std::size_t n = a.rows();
    Complex det = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      for (std::size_t i = c + 1; i < n; ++i)
        if (a(i, c).abs() > a(p, c).abs()) p = i;
      if (a(p, c).is_zero()) return Scalar::zero(m.field());
      if (p != c) {
        swap_rows(a, c, p);
        det = -det;
      }
      det *= a(c, c).to_complex();
      for (std::size_t i = c + 1; i < n; ++i) {
        const Scalar factor = a(i, c) / a(c, c);
        for (std::size_t j = c; j < n; ++j) a(i, j) -= factor * a(c, j);
      }
    }
    return Scalar(det);
  }
  Matrix a = m;
  int sign = 1;
  if (bareiss(a, sign) < a.rows()) return Scalar::zero(m.field());
  Scalar det = a(a.rows() - 1, a.cols() - 1);
  return sign < 0 ? -det : det;
}

Matrix reduced_row_echelon(const Matrix& m, const Tolerance& tol) {
  Matrix a = m;
  const Field f = m.field();
  const bool exact = is_exact(f);
  const double cutoff = exact ? 0.0 : tol.rank_threshold * std::max(m.max_abs(), 1e-300);
  auto negligible = [&](const Scalar& x) { return exact ? x.is_zero() : x.abs() <= cutoff; };

  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = a.rows();
    if (exact) {
      for (std::size_t i = r; i < a.rows(); ++i)
        if (!a(i, c).is_zero()) {
          p = i;
          break;
        }
    } else {
      double best = cutoff;
      for (std::size_t i = r; i < a.rows(); ++i)
        if (a(i, c).abs() > best) {
          best = a(i, c).abs();
          p = i;
        }
    }
    if (p == a.rows()) {
      for (std::size_t i = r; i < a.rows(); ++i) a(i, c) = Scalar::zero(f);
      continue;
    }
    swap_rows(a, r, p);
    const Scalar scale = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= scale;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        a(i, j) -= factor * a(r, j);
        if (!exact && negligible(a(i, j))) a(i, j) = Scalar::zero(f);
      }
    }
    ++r;
  }
  Matrix out(r, a.cols(), f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

}  // namespace tlfiber
