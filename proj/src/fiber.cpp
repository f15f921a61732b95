#include "tlfiber/fiber.hpp"

#include <algorithm>

namespace tlfiber {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

// Contracts legs i, i+1 of a map whose output has k legs.
Matrix apply_cap(const Matrix& cur, std::size_t n, std::size_t k, std::size_t i,
                 const Matrix& e) {
  const std::size_t left = ipow(n, i - 1), right = ipow(n, k - i - 1);
  Matrix out(left * right, cur.cols(), cur.field());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Scalar& w = e(a, b);
      if (w.is_zero()) continue;
      for (std::size_t l = 0; l < left; ++l)
        for (std::size_t r = 0; r < right; ++r) {
          const std::size_t src = ((l * n + a) * n + b) * right + r;
          const std::size_t dst = l * right + r;
          for (std::size_t c = 0; c < cur.cols(); ++c)
            if (!cur(src, c).is_zero()) out(dst, c) += w * cur(src, c);
        }
    }
  return out;
}

// Inserts the copairing at new legs i, i+1 of a map whose output has k legs.
Matrix apply_cup(const Matrix& cur, std::size_t n, std::size_t k, std::size_t i,
                 const Matrix& d) {
  const std::size_t left = ipow(n, i - 1), right = ipow(n, k - i + 1);
  Matrix out(left * n * n * right, cur.cols(), cur.field());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Scalar& w = d(a, b);
      if (w.is_zero()) continue;
      for (std::size_t l = 0; l < left; ++l)
        for (std::size_t r = 0; r < right; ++r) {
          const std::size_t src = l * right + r;
          const std::size_t dst = ((l * n + a) * n + b) * right + r;
          for (std::size_t c = 0; c < cur.cols(); ++c)
            if (!cur(src, c).is_zero()) out(dst, c) = w * cur(src, c);
        }
    }
  return out;
}

}  // namespace

BilinearForm::BilinearForm(Matrix e, const Tolerance& tol)
    : e_(std::move(e)), d_mat_(invert(e_, tol)) {
  d_ = Scalar::zero(e_.field());
  for (std::size_t i = 0; i < e_.rows(); ++i)
    for (std::size_t j = 0; j < e_.cols(); ++j) d_ += e_(i, j) * d_mat_(i, j);
}

TensorMap compose(const TensorMap& g, const TensorMap& f) {
  if (f.out_legs != g.in_legs || f.N != g.N)
    throw ShapeMismatch("compose: tensor map shapes do not chain");
  return {f.in_legs, g.out_legs, f.N, g.entries * f.entries};
}

TensorMap tensor(const TensorMap& f, const TensorMap& g) {
  if (f.N != g.N) throw ShapeMismatch("tensor: different N");
  return {f.in_legs + g.in_legs, f.out_legs + g.out_legs, f.N, f.entries.kron(g.entries)};
}

Scalar dimension_of(const Matrix& e, const Tolerance& tol) {
  return (e.transpose() * invert(e, tol)).trace();
}

TensorMap evaluate(const BilinearForm& b, const PlanarDiagram& f) {
  const std::size_t n = b.N();
  const TLWord word = diagram_to_word(f);
  Matrix cur = Matrix::identity(ipow(n, f.source()), b.field());
  std::size_t k = f.source();
  for (const auto& l : word.letters) {
    if (l.op == LetterOp::Cap) {
      cur = apply_cap(cur, n, k, l.index, b.E());
      k -= 2;
    } else {
      cur = apply_cup(cur, n, k, l.index, b.D());
      k += 2;
    }
  }
  Scalar scale = Scalar::one(b.field());
  for (std::size_t i = 0; i < f.loops(); ++i) scale *= b.d();
  if (!scale.is_one()) cur = cur.scaled(scale);
  return {f.source(), f.target(), n, std::move(cur)};
}

Matrix transport(const Matrix& e, const Matrix& t, const Tolerance& tol) {
  require_square(e, "transport");
  if (t.rows() != e.rows() || t.cols() != e.cols())
    throw ShapeMismatch("transport: T must have the shape of E");
  invert(t, tol);
  return t.transpose() * e * t;
}

bool stabilizes(const Matrix& e, const Matrix& t, const Tolerance& tol) {
  if (t.rows() != e.rows() || t.cols() != e.cols() || !e.is_square()) return false;
  const Matrix moved = t.transpose() * e * t;
  if (is_exact(e.field()) && is_exact(t.field()) && e.field() == t.field()) return moved == e;
  return moved.max_abs_diff(e) <= tol.rank_threshold * std::max(1.0, e.max_abs());
}

}  // namespace tlfiber
