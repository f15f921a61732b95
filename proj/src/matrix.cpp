#include "tlfiber/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tlfiber {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field),
      data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows.front().size(), rows.front().empty()
                                                 ? Field::Rational
                                                 : rows.front().front().field());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_)
      throw ShapeMismatch("ragged rows in matrix literal");
    for (std::size_t c = 0; c < m.cols_; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::parse(std::initializer_list<std::initializer_list<const char*>> rows,
                     Field field) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& row : rows) {
    auto& dst = out.emplace_back();
    for (const char* entry : row) dst.push_back(Scalar::parse(entry, field));
  }
  Matrix m = from_rows(out);
  m.field_ = field;
  return m;
}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = Scalar::one(field);
  return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> entries) {
  Field f = entries.empty() ? Field::Rational : entries.front().field();
  Matrix m(entries.size(), entries.size(), f);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, entries[i]);
  return m;
}

Matrix Matrix::block_diagonal(std::span<const Matrix> blocks, Field field) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix m(rows, cols, field);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m.set(r0 + r, c0 + c, b(r, c));
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, Scalar value) {
  if (value.field() != field_)
    throw FieldMismatch("matrix entry from field " +
                        std::string(field_name(value.field())) +
                        " in a " + std::string(field_name(field_)) + " matrix");
  data_[r * cols_ + c] = std::move(value);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  return t;
}

Matrix Matrix::conj() const {
  Matrix t = *this;
  for (auto& x : t.data_) x = x.conj();
  return t;
}

Matrix Matrix::adjoint() const { return transpose().conj(); }

Matrix Matrix::embed(Field target) const {
  if (target == field_) return *this;
  Matrix t(rows_, cols_, target);
  for (std::size_t i = 0; i < data_.size(); ++i) t.data_[i] = data_[i].embed(target);
  return t;
}

Scalar Matrix::trace() const {
  require_square(*this, "trace");
  Scalar s = Scalar::zero(field_);
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix t = *this;
  for (auto& x : t.data_) x *= s;
  return t;
}

Matrix Matrix::power(unsigned k) const {
  require_square(*this, "power");
  Matrix result = identity(rows_, field_);
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

Matrix Matrix::kron(const Matrix& o) const {
  if (field_ != o.field_) throw FieldMismatch("Kronecker product across fields");
  Matrix k(rows_ * o.rows_, cols_ * o.cols_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (a.is_zero()) continue;
      for (std::size_t r2 = 0; r2 < o.rows_; ++r2)
        for (std::size_t c2 = 0; c2 < o.cols_; ++c2)
          k(r * o.rows_ + r2, c * o.cols_ + c2) = a * o(r2, c2);
    }
  return k;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sum");
  if (field_ != o.field_) throw FieldMismatch("matrix sum across fields");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix difference");
  if (field_ != o.field_) throw FieldMismatch("matrix difference across fields");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw ShapeMismatch("matrix product " + std::to_string(a.rows_) + "x" +
                        std::to_string(a.cols_) + " * " + std::to_string(b.rows_) +
                        "x" + std::to_string(b.cols_));
  if (a.field_ != b.field_) throw FieldMismatch("matrix product across fields");
  Matrix p(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) p(i, j) += x * y;
      }
    }
  return p;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ &&
         data_ == o.data_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool Matrix::is_identity() const {
  return is_square() && *this == identity(rows_, field_);
}

double Matrix::max_abs() const {
  double m = 0;
  for (const auto& x : data_) m = std::max(m, x.abs());
  return m;
}

double Matrix::max_abs_diff(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("max_abs_diff");
  double m = 0;
  for (std::size_t i = 0; i < data_.size(); ++i)
    m = std::max(m, std::abs(data_[i].to_complex() - o.data_[i].to_complex()));
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

void require_square(const Matrix& m, const char* op) {
  if (!m.is_square())
    throw ShapeMismatch(std::string(op) + " needs a square matrix, got " +
                        std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void require_kernel_size(const Matrix& m, const char* op) {
  require_square(m, op);
  if (m.rows() > kMaxKernelSize)
    throw SizeLimit(std::string(op) + ": size " + std::to_string(m.rows()) +
                    " exceeds the desk-scale limit of " +
                    std::to_string(kMaxKernelSize));
}

}  // namespace tlfiber
