#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>
#include <variant>

#include "tlfiber/errors.hpp"

namespace tlfiber {

/// The three scalar fields values can live in. Exact fields come first so
/// that `embed` only ever moves to a larger index.
enum class Field { Rational, ComplexRational, Complex };

std::string_view field_name(Field f);
Field parse_field(std::string_view name);
inline bool is_exact(Field f) { return f != Field::Complex; }

using Rational = mpq_class;
using Complex = std::complex<double>;

struct ComplexRational {
  Rational re;
  Rational im;

  bool operator==(const ComplexRational& o) const {
    return re == o.re && im == o.im;
  }
};

/// A value tagged with its field. Arithmetic between different fields throws
/// FieldMismatch; moving between fields is explicit via embed().
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  explicit Scalar(Rational q) : value_(std::move(q)) { canon(); }
  explicit Scalar(ComplexRational z) : value_(std::move(z)) { canon(); }
  explicit Scalar(Complex z) : value_(z) {}

  static Scalar rational(long num, long den = 1);
  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(long n, Field f);
  static Scalar from_double(double x, Field f);

  /// Parses "p/q", "p", or a decimal like "-4.25" (exactly) into the field.
  /// For ComplexRational/Complex the string is taken as the real part.
  static Scalar parse(std::string_view text, Field f = Field::Rational);

  Field field() const { return static_cast<Field>(value_.index()); }

  const Rational& as_rational() const;
  const ComplexRational& as_complex_rational() const;
  Complex to_complex() const;
  double real_double() const { return to_complex().real(); }
  double abs() const { return std::abs(to_complex()); }

  bool is_zero() const;
  bool is_one() const;

  /// Lossless move to a larger field; moving down throws FieldMismatch.
  Scalar embed(Field target) const;

  Scalar conj() const;
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Exact equality; values from different fields never compare equal.
  bool operator==(const Scalar& o) const;

  std::string to_string() const;

  /// Ordering by real part, then imaginary part.
  static bool canonical_less(const Scalar& a, const Scalar& b);

 private:
  void canon();
  void require_same(const Scalar& o, const char* op) const;

  std::variant<Rational, ComplexRational, Complex> value_;
};

std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace tlfiber
