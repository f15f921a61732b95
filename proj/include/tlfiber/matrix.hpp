#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tlfiber/scalar.hpp"

namespace tlfiber {

/// Dense row-major matrix whose entries all live in one field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field = Field::Rational);

  /// Builds from nested rows; every entry must share one field.
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  /// Convenience for literals: entries parsed with Scalar::parse.
  static Matrix parse(std::initializer_list<std::initializer_list<const char*>> rows,
                      Field field = Field::Rational);
  static Matrix identity(std::size_t n, Field field = Field::Rational);
  static Matrix diagonal(std::span<const Scalar> entries);
  static Matrix block_diagonal(std::span<const Matrix> blocks, Field field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  /// Mutable access; the caller must keep the entry in field().
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Scalar value);

  std::span<const Scalar> data() const { return data_; }

  Matrix transpose() const;
  Matrix conj() const;
  Matrix adjoint() const;
  Matrix embed(Field target) const;
  Scalar trace() const;
  Matrix scaled(const Scalar& s) const;
  Matrix power(unsigned k) const;
  Matrix kron(const Matrix& other) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  /// Exact entrywise equality (same shape and field).
  bool operator==(const Matrix& o) const;

  bool is_zero() const;
  bool is_identity() const;

  /// max |a_ij|, evaluated in double precision.
  double max_abs() const;
  /// max |a_ij - b_ij| in double precision; fields may differ.
  double max_abs_diff(const Matrix& o) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_ = Field::Rational;
  std::vector<Scalar> data_;
};

/// Largest matrix the square kernels (invert, spectrum, Jordan data, polar)
/// accept.
inline constexpr std::size_t kMaxKernelSize = 64;

void require_square(const Matrix& m, const char* op);
void require_kernel_size(const Matrix& m, const char* op);

}  // namespace tlfiber
