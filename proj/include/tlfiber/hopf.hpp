#pragma once

// Hopf algebra attached to a bilinear form E on K^N.
//
// Generators a_ij (1 <= i, j <= N) form the formal matrix a. The algebra is
// cut out by
//   sum_kl E_kl a_ki a_lj = E_ij 1      (tA E a = E)
//   sum_ij D_ij a_ki a_lj = D_kl 1      (a D tA = D),  D = E^-1,
// with coproduct Delta(a_ij) = sum_k a_ik (x) a_kj and counit eps(a_ij) = delta_ij.
//
// Antipode. In a frame xi the generators satisfy S(a^xi_ij) = a^{xi*}_ji where
// xi* is the dual frame, F(eps)(xi*_i (x) xi_j) = delta_ij. In the canonical
// frame e this reads sum_k (xi*_i)_k E_kj = delta_ij, so xi*_i = sum_k C_ki e_k
// with tC E = 1, i.e. C = tD. Frames related by (xi) = (eta) T have
// a^eta T = T a^xi; with (xi*) = (e) C this gives a^{xi*} = C^-1 a C
// = tE a tD. Transposing, S(a) = t(a^{xi*}) = D tA E = E^-1 tA E, that is
//   S(a_ij) = sum_kl D_ik E_lj a_lk.
// Applying this twice gives S^2(a) = Theta a Theta^-1 with Theta = E^-1 tE.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlfiber/fiber.hpp"

namespace tlfiber {

/// Generator a_ij, 1-based.
struct Generator {
  std::size_t i = 1;
  std::size_t j = 1;

  auto operator<=>(const Generator&) const = default;
  /// (i-1) N + (j-1)
  std::size_t linear_index(std::size_t N) const { return (i - 1) * N + (j - 1); }
  static Generator from_index(std::size_t index, std::size_t N) {
    return {index / N + 1, index % N + 1};
  }
};

/// An element of degree <= 2 of the free algebra on the a_ij.
class NCQuadratic {
 public:
  using Monomial = std::pair<Generator, Generator>;

  NCQuadratic() = default;
  NCQuadratic(std::size_t N, Field field);

  std::size_t N() const { return n_; }
  Field field() const { return field_; }
  const Scalar& constant() const { return constant_; }
  const std::map<Generator, Scalar>& linear() const { return linear_; }
  const std::map<Monomial, Scalar>& quadratic() const { return quadratic_; }

  NCQuadratic& add_constant(const Scalar& c);
  NCQuadratic& add_linear(Generator g, const Scalar& c);
  NCQuadratic& add_quadratic(Generator g, Generator h, const Scalar& c);

  /// [constant, N^2 linear, N^4 quadratic] with quadratic index g * N^2 + h.
  std::vector<Scalar> coordinates() const;
  static NCQuadratic from_coordinates(std::size_t N, const std::vector<Scalar>& coords);
  static std::size_t dimension(std::size_t N) { return 1 + N * N + N * N * N * N; }

  bool operator==(const NCQuadratic& o) const;
  std::string to_string() const;

 private:
  void check(Generator g) const;

  std::size_t n_ = 0;
  Field field_ = Field::Rational;
  Scalar constant_;
  std::map<Generator, Scalar> linear_;
  std::map<Monomial, Scalar> quadratic_;
};

/// a* = T a T^-1 with conjugated coefficients.
struct StarStructure {
  Matrix T;
  /// star[g][h]: a_g* = sum_h conj-linear star[g][h] a_h.
  Matrix matrix;
  /// The deformation parameter q = -sign h^-2 of the matching SL_q(2).
  Scalar q;
};

struct HopfPresentation {
  std::size_t N = 0;
  Field field = Field::Rational;
  /// E-relations for (i, j) in row-major order, then D-relations.
  std::vector<NCQuadratic> relations;
  /// S(a_g) = sum_h antipode(g, h) a_h.
  Matrix antipode;
  std::optional<StarStructure> star;
};

HopfPresentation present(const BilinearForm& b);

/// S(a) = E^-1 tA E on the span of the generators.
Matrix antipode_matrix(const BilinearForm& b);

/// The N^2 x N^2 matrix of a -> M a M^-1 on generators.
Matrix conjugation_substitution(const Matrix& m, const Tolerance& tol = {});

/// Replaces each a_g by sum_h L(g, h) a_h, extended multiplicatively.
NCQuadratic substitute(const NCQuadratic& r, const Matrix& l);

/// Echelon basis of the span of relation vectors in the degree <= 2 part.
class RelationSpan {
 public:
  explicit RelationSpan(const std::vector<NCQuadratic>& rels, std::size_t N, Field field,
                        const Tolerance& tol = {});

  std::size_t N() const { return n_; }
  std::size_t rank() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }

  bool contains(const NCQuadratic& r) const;
  bool contains(const RelationSpan& o) const;
  bool equals(const RelationSpan& o) const;

 private:
  std::size_t n_;
  Field field_;
  Tolerance tol_;
  Matrix basis_;
};

RelationSpan relation_span(const std::vector<NCQuadratic>& rels, const Tolerance& tol = {});

/// T = [[0, h], [sign/h, 0]]. Throws InvalidParameter unless h >= 1 is real
/// and sign is +-1; checks that the star map is an involution.
StarStructure star_structure(const Scalar& h, int sign);

/// Whether applying the conjugate-linear star map twice is the identity.
bool star_is_involutive(const StarStructure& s);

/// Delta(a_g) as pairs (a_ik, a_kj).
std::vector<std::array<Generator, 2>> coproduct(std::size_t N, Generator g);
/// (Delta (x) id) Delta(a_g) and (id (x) Delta) Delta(a_g) as sorted triples.
std::vector<std::array<Generator, 3>> coproduct_twice_left(std::size_t N, Generator g);
std::vector<std::array<Generator, 3>> coproduct_twice_right(std::size_t N, Generator g);
/// eps(a_ij) = delta_ij
bool counit(Generator g);
/// (eps (x) id) Delta(a_g) and (id (x) eps) Delta(a_g) as generator lists.
std::vector<Generator> counit_left(std::size_t N, Generator g);
std::vector<Generator> counit_right(std::size_t N, Generator g);

/// E_q = [[0, 1], [-1/q, 0]].
Matrix sl_q2_form(const Scalar& q);
/// ab = q^-1 ba, ac = q^-1 ca, bd = q^-1 db, cd = q^-1 dc, bc = cb,
/// ad - q^-1 bc = 1, da - q bc = 1 with (a, b, c, d) = (a11, a12, a21, a22).
std::vector<NCQuadratic> sl_q2_relations(const Scalar& q);
/// E_tau = [[tau, 1], [-1, 0]].
std::vector<NCQuadratic> tau_relations(const Scalar& tau);
Matrix tau_form(const Scalar& tau);

}  // namespace tlfiber
