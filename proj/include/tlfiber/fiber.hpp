#pragma once

#include <cstddef>

#include "tlfiber/diagram.hpp"
#include "tlfiber/linalg.hpp"

namespace tlfiber {

/// A nondegenerate bilinear form E on V = K^N with copairing D = E^-1 and
/// loop value d = sum_ij E_ij D_ij.
class BilinearForm {
 public:
  /// Throws SingularMatrix when E has no inverse.
  explicit BilinearForm(Matrix e, const Tolerance& tol = {});

  const Matrix& E() const { return e_; }
  const Matrix& D() const { return d_mat_; }
  std::size_t N() const { return e_.rows(); }
  const Scalar& d() const { return d_; }
  Field field() const { return e_.field(); }

 private:
  Matrix e_;
  Matrix d_mat_;
  Scalar d_;
};

/// A linear map V^{(x)m} -> V^{(x)n} stored as an N^n x N^m matrix. Multi
/// indices are big-endian: leg 1 is the most significant digit.
struct TensorMap {
  std::size_t in_legs = 0;
  std::size_t out_legs = 0;
  std::size_t N = 0;
  Matrix entries;

  bool operator==(const TensorMap& o) const = default;
};

/// g after f.
TensorMap compose(const TensorMap& g, const TensorMap& f);
/// f (x) g, f's legs first.
TensorMap tensor(const TensorMap& f, const TensorMap& g);

/// tr(tE E^-1).
Scalar dimension_of(const Matrix& e, const Tolerance& tol = {});

/// Cap(i) contracts legs i, i+1 with E (left leg is E's row index); Cup(i)
/// inserts D on the new legs; the result is scaled by d^loops.
TensorMap evaluate(const BilinearForm& b, const PlanarDiagram& f);

/// tT E T. Throws ShapeMismatch or SingularMatrix.
Matrix transport(const Matrix& e, const Matrix& t, const Tolerance& tol = {});

/// tT E T == E, exactly or to rank_threshold * max(1, max|E|).
bool stabilizes(const Matrix& e, const Matrix& t, const Tolerance& tol = {});

}  // namespace tlfiber
