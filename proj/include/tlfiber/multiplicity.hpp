#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tlfiber/scalar.hpp"

namespace tlfiber {

/// Jordan data at one eigenvalue: sizes[k-1] is the number of k-blocks.
struct JordanData {
  Scalar eigenvalue;
  std::vector<std::size_t> sizes;

  /// |mu| = sum_k k * mu^(k)
  std::size_t total() const;
};

/// Eigenvalue -> Jordan block multiplicities. Eigenvalues are nonzero,
/// unique, and kept sorted by (re, im); trailing zero counts are trimmed and
/// empty entries dropped.
class MultiplicityFunction {
 public:
  MultiplicityFunction() = default;
  explicit MultiplicityFunction(std::vector<JordanData> entries);

  const std::vector<JordanData>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Sizes at z (exact match, or within `radius` for approximate values);
  /// nullptr when z carries no blocks.
  const std::vector<std::size_t>* find(const Scalar& z, double radius = 0) const;

  /// mu^(k)(z), zero when absent.
  std::size_t count(const Scalar& z, std::size_t k, double radius = 0) const;

  /// sum_z |mu(z)|, the matrix size.
  std::size_t total() const;

  /// The field of the eigenvalues (Rational when empty).
  Field field() const;

  bool operator==(const MultiplicityFunction& o) const { return equals(o, 0); }
  /// Same block data with eigenvalues paired within `radius`.
  bool equals(const MultiplicityFunction& o, double radius) const;

  std::string to_string() const;

 private:
  std::vector<JordanData> entries_;
};

}  // namespace tlfiber
