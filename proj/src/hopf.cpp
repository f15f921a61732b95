#include "tlfiber/hopf.hpp"

#include <algorithm>
#include <sstream>

namespace tlfiber {

namespace {

const Generator kA{1, 1}, kB{1, 2}, kC{2, 1}, kD{2, 2};

Matrix stack(const Matrix& top, const Matrix& bottom) {
  Matrix out(top.rows() + bottom.rows(), top.cols(), top.field());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < bottom.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
  return out;
}

Field wider(Field a, Field b) { return static_cast<int>(a) > static_cast<int>(b) ? a : b; }

std::string generator_name(Generator g) {
  return "a" + std::to_string(g.i) + std::to_string(g.j);
}

// r = sum of c * x * y over the listed monomials, minus k * 1.
NCQuadratic relation(Field f, std::initializer_list<std::tuple<Scalar, Generator, Generator>> terms,
                     const Scalar& k) {
  NCQuadratic r(2, f);
  for (const auto& [c, x, y] : terms) r.add_quadratic(x, y, c);
  r.add_constant(-k);
  return r;
}

}  // namespace

NCQuadratic::NCQuadratic(std::size_t N, Field field)
    : n_(N), field_(field), constant_(Scalar::zero(field)) {}

void NCQuadratic::check(Generator g) const {
  if (g.i < 1 || g.j < 1 || g.i > n_ || g.j > n_)
    throw IndexOutOfRange("generator " + generator_name(g) + " outside 1.." + std::to_string(n_));
}

NCQuadratic& NCQuadratic::add_constant(const Scalar& c) {
  constant_ += c;
  return *this;
}

NCQuadratic& NCQuadratic::add_linear(Generator g, const Scalar& c) {
  check(g);
  if (c.is_zero()) return *this;
  auto [it, inserted] = linear_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) linear_.erase(it);
  }
  return *this;
}

NCQuadratic& NCQuadratic::add_quadratic(Generator g, Generator h, const Scalar& c) {
  check(g);
  check(h);
  if (c.is_zero()) return *this;
  auto [it, inserted] = quadratic_.try_emplace({g, h}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) quadratic_.erase(it);
  }
  return *this;
}

std::vector<Scalar> NCQuadratic::coordinates() const {
  const std::size_t n2 = n_ * n_;
  std::vector<Scalar> v(dimension(n_), Scalar::zero(field_));
  v[0] = constant_;
  for (const auto& [g, c] : linear_) v[1 + g.linear_index(n_)] = c;
  for (const auto& [m, c] : quadratic_)
    v[1 + n2 + m.first.linear_index(n_) * n2 + m.second.linear_index(n_)] = c;
  return v;
}

NCQuadratic NCQuadratic::from_coordinates(std::size_t N, const std::vector<Scalar>& coords) {
  if (coords.size() != dimension(N)) throw ShapeMismatch("coordinate vector has wrong length");
  const std::size_t n2 = N * N;
  NCQuadratic r(N, coords.front().field());
  r.add_constant(coords[0]);
  for (std::size_t g = 0; g < n2; ++g) r.add_linear(Generator::from_index(g, N), coords[1 + g]);
  for (std::size_t g = 0; g < n2; ++g)
    for (std::size_t h = 0; h < n2; ++h)
      r.add_quadratic(Generator::from_index(g, N), Generator::from_index(h, N),
                      coords[1 + n2 + g * n2 + h]);
  return r;
}

bool NCQuadratic::operator==(const NCQuadratic& o) const {
  return n_ == o.n_ && field_ == o.field_ && constant_ == o.constant_ && linear_ == o.linear_ &&
         quadratic_ == o.quadratic_;
}

std::string NCQuadratic::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Scalar& c, const std::string& mono) {
    os << (first ? "" : " + ") << "(" << c.to_string() << ")" << (mono.empty() ? "" : "*" + mono);
    first = false;
  };
  for (const auto& [m, c] : quadratic_)
    term(c, generator_name(m.first) + "*" + generator_name(m.second));
  for (const auto& [g, c] : linear_) term(c, generator_name(g));
  if (!constant_.is_zero() || first) term(constant_, "");
  return os.str();
}

Matrix antipode_matrix(const BilinearForm& b) {
  const std::size_t n = b.N();
  const Matrix& e = b.E();
  const Matrix& d = b.D();
  Matrix s(n * n, n * n, b.field());
  // S(a_ij) = sum_kl D_ik E_lj a_lk
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) s(i * n + j, l * n + k) = d(i, k) * e(l, j);
  return s;
}

HopfPresentation present(const BilinearForm& b) {
  const std::size_t n = b.N();
  const Field f = b.field();
  const Matrix& e = b.E();
  const Matrix& d = b.D();
  HopfPresentation p{n, f, {}, antipode_matrix(b), std::nullopt};
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      NCQuadratic r(n, f);
      for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t l = 1; l <= n; ++l) r.add_quadratic({k, i}, {l, j}, e(k - 1, l - 1));
      r.add_constant(-e(i - 1, j - 1));
      p.relations.push_back(std::move(r));
    }
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t l = 1; l <= n; ++l) {
      NCQuadratic r(n, f);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) r.add_quadratic({k, i}, {l, j}, d(i - 1, j - 1));
      r.add_constant(-d(k - 1, l - 1));
      p.relations.push_back(std::move(r));
    }
  return p;
}

Matrix conjugation_substitution(const Matrix& m, const Tolerance& tol) {
  const std::size_t n = m.rows();
  const Matrix inv = invert(m, tol);
  Matrix l(n * n, n * n, m.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t q = 0; q < n; ++q) l(i * n + j, k * n + q) = m(i, k) * inv(q, j);
  return l;
}

NCQuadratic substitute(const NCQuadratic& r, const Matrix& l) {
  const std::size_t n = r.N(), n2 = n * n;
  if (l.rows() != n2 || l.cols() != n2) throw ShapeMismatch("substitution matrix must be N^2 x N^2");
  NCQuadratic out(n, r.field());
  out.add_constant(r.constant());
  for (const auto& [g, c] : r.linear())
    for (std::size_t h = 0; h < n2; ++h)
      out.add_linear(Generator::from_index(h, n), c * l(g.linear_index(n), h));
  for (const auto& [m, c] : r.quadratic()) {
    const std::size_t g1 = m.first.linear_index(n), g2 = m.second.linear_index(n);
    for (std::size_t h1 = 0; h1 < n2; ++h1) {
      if (l(g1, h1).is_zero()) continue;
      const Scalar c1 = c * l(g1, h1);
      for (std::size_t h2 = 0; h2 < n2; ++h2)
        out.add_quadratic(Generator::from_index(h1, n), Generator::from_index(h2, n),
                          c1 * l(g2, h2));
    }
  }
  return out;
}

RelationSpan::RelationSpan(const std::vector<NCQuadratic>& rels, std::size_t N, Field field,
                           const Tolerance& tol)
    : n_(N), field_(field), tol_(tol) {
  Matrix m(rels.size(), NCQuadratic::dimension(N), field);
  for (std::size_t r = 0; r < rels.size(); ++r) {
    if (rels[r].N() != N) throw ShapeMismatch("relations over different N");
    const auto coords = rels[r].coordinates();
    for (std::size_t c = 0; c < coords.size(); ++c) m(r, c) = coords[c].embed(field);
  }
  basis_ = reduced_row_echelon(m, tol);
}

bool RelationSpan::contains(const NCQuadratic& r) const {
  return contains(RelationSpan({r}, n_, wider(field_, r.field()), tol_));
}

bool RelationSpan::contains(const RelationSpan& o) const {
  if (o.n_ != n_) return false;
  const Field f = wider(field_, o.field_);
  const Matrix both = stack(basis_.embed(f), o.basis_.embed(f));
  return reduced_row_echelon(both, tol_).rows() == rank();
}

bool RelationSpan::equals(const RelationSpan& o) const {
  return rank() == o.rank() && contains(o);
}

RelationSpan relation_span(const std::vector<NCQuadratic>& rels, const Tolerance& tol) {
  if (rels.empty()) throw InvalidParameter("relation_span needs at least one relation to fix N");
  Field f = rels.front().field();
  for (const auto& r : rels) f = wider(f, r.field());
  return RelationSpan(rels, rels.front().N(), f, tol);
}

StarStructure star_structure(const Scalar& h, int sign) {
  if (sign != 1 && sign != -1) throw InvalidParameter("sign must be +1 or -1");
  const Complex hv = h.to_complex();
  if (hv.imag() != 0.0 || hv.real() < 1.0)
    throw InvalidParameter("h must be a real number >= 1, got " + h.to_string());
  const Field f = h.field();
  const Scalar s = Scalar::from_int(sign, f);
  Matrix t(2, 2, f);
  t(0, 1) = h;
  t(1, 0) = s / h;
  StarStructure out{t, conjugation_substitution(t), -s / (h * h)};
  if (!star_is_involutive(out)) throw NumericalFailure("star map is not involutive");
  return out;
}

bool star_is_involutive(const StarStructure& s) {
  const Matrix twice = s.matrix.conj() * s.matrix;
  const Matrix id = Matrix::identity(twice.rows(), twice.field());
  if (is_exact(twice.field())) return twice == id;
  return twice.max_abs_diff(id) <= 1e-12;
}

std::vector<std::array<Generator, 2>> coproduct(std::size_t N, Generator g) {
  std::vector<std::array<Generator, 2>> out;
  for (std::size_t k = 1; k <= N; ++k) out.push_back({Generator{g.i, k}, Generator{k, g.j}});
  return out;
}

std::vector<std::array<Generator, 3>> coproduct_twice_left(std::size_t N, Generator g) {
  std::vector<std::array<Generator, 3>> out;
  for (const auto& [x, y] : coproduct(N, g))
    for (const auto& [u, v] : coproduct(N, x)) out.push_back({u, v, y});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::array<Generator, 3>> coproduct_twice_right(std::size_t N, Generator g) {
  std::vector<std::array<Generator, 3>> out;
  for (const auto& [x, y] : coproduct(N, g))
    for (const auto& [u, v] : coproduct(N, y)) out.push_back({x, u, v});
  std::sort(out.begin(), out.end());
  return out;
}

bool counit(Generator g) { return g.i == g.j; }

std::vector<Generator> counit_left(std::size_t N, Generator g) {
  std::vector<Generator> out;
  for (const auto& [x, y] : coproduct(N, g))
    if (counit(x)) out.push_back(y);
  return out;
}

std::vector<Generator> counit_right(std::size_t N, Generator g) {
  std::vector<Generator> out;
  for (const auto& [x, y] : coproduct(N, g))
    if (counit(y)) out.push_back(x);
  return out;
}

Matrix sl_q2_form(const Scalar& q) {
  const Field f = q.field();
  Matrix e(2, 2, f);
  e(0, 1) = Scalar::one(f);
  e(1, 0) = -q.inverse();
  return e;
}

std::vector<NCQuadratic> sl_q2_relations(const Scalar& q) {
  const Field f = q.field();
  const Scalar one = Scalar::one(f), zero = Scalar::zero(f), qi = q.inverse();
  return {
      relation(f, {{one, kA, kB}, {-qi, kB, kA}}, zero),
      relation(f, {{one, kA, kC}, {-qi, kC, kA}}, zero),
      relation(f, {{one, kB, kD}, {-qi, kD, kB}}, zero),
      relation(f, {{one, kC, kD}, {-qi, kD, kC}}, zero),
      relation(f, {{one, kB, kC}, {-one, kC, kB}}, zero),
      relation(f, {{one, kA, kD}, {-qi, kB, kC}}, one),
      relation(f, {{one, kD, kA}, {-q, kB, kC}}, one),
  };
}

Matrix tau_form(const Scalar& tau) {
  const Field f = tau.field();
  Matrix e(2, 2, f);
  e(0, 0) = tau;
  e(0, 1) = Scalar::one(f);
  e(1, 0) = -Scalar::one(f);
  return e;
}

std::vector<NCQuadratic> tau_relations(const Scalar& t) {
  const Field f = t.field();
  const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
  return {
      relation(f, {{t, kA, kA}, {-one, kB, kA}, {one, kA, kB}}, t),
      relation(f, {{t, kD, kD}, {-one, kB, kD}, {one, kD, kB}}, t),
      relation(f, {{t, kA, kC}, {-one, kB, kC}, {one, kA, kD}}, one),
      relation(f, {{t, kD, kC}, {-one, kB, kC}, {one, kD, kA}}, one),
      relation(f, {{t, kC, kA}, {-one, kD, kA}, {one, kC, kB}}, -one),
      relation(f, {{t, kC, kD}, {-one, kA, kD}, {one, kC, kB}}, -one),
      relation(f, {{t, kC, kC}, {-one, kD, kC}, {one, kC, kD}}, zero),
      relation(f, {{t, kC, kC}, {-one, kA, kC}, {one, kC, kA}}, zero),
  };
}

}  // namespace tlfiber
