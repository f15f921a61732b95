#include "tlfiber/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace tlfiber {

std::string_view field_name(Field f) {
  switch (f) {
    case Field::Rational: return "rational";
    case Field::ComplexRational: return "crational";
    case Field::Complex: return "complex";
  }
  return "?";
}

Field parse_field(std::string_view name) {
  if (name == "rational") return Field::Rational;
  if (name == "crational") return Field::ComplexRational;
  if (name == "complex") return Field::Complex;
  throw ParseError("unknown scalar field '" + std::string(name) + "'");
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string_view digits = s;
  bool neg = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    neg = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits))
    throw ParseError("not an integer: '" + std::string(s) + "'");
  mpz_class z(std::string(digits), 10);
  return neg ? mpz_class(-z) : z;
}

// Decimal with optional fraction and exponent, converted exactly.
Rational parse_decimal(std::string_view s) {
  std::string_view body = s;
  bool neg = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = body.substr(e + 1);
    mpz_class ez = parse_integer(exp_text);
    if (!ez.fits_slong_p() || std::labs(ez.get_si()) > 4096)
      throw ParseError("exponent out of range in '" + std::string(s) + "'");
    exponent = ez.get_si();
    body = body.substr(0, e);
  }
  std::string digits;
  auto dot = body.find('.');
  std::string_view int_part = body.substr(0, dot);
  std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  if (int_part.empty() && frac_part.empty())
    throw ParseError("not a number: '" + std::string(s) + "'");
  if ((!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part)))
    throw ParseError("not a number: '" + std::string(s) + "'");
  digits.append(int_part);
  digits.append(frac_part);
  exponent -= static_cast<long>(frac_part.size());
  mpz_class mantissa(digits.empty() ? "0" : digits, 10);
  Rational q(mantissa);
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0)
    q *= p10;
  else
    q /= p10;
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  return parse_decimal(text);
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::zero(Field f) { return from_int(0, f); }
Scalar Scalar::one(Field f) { return from_int(1, f); }

Scalar Scalar::from_int(long n, Field f) {
  switch (f) {
    case Field::Rational: return Scalar(Rational(n));
    case Field::ComplexRational: return Scalar(ComplexRational{Rational(n), Rational(0)});
    case Field::Complex: return Scalar(Complex(static_cast<double>(n), 0.0));
  }
  return Scalar();
}

Scalar Scalar::from_double(double x, Field f) {
  if (f == Field::Complex) return Scalar(Complex(x, 0.0));
  if (!std::isfinite(x)) throw ParseError("non-finite value");
  return Scalar(Rational(x)).embed(f);
}

Scalar Scalar::parse(std::string_view text, Field f) {
  Rational q = parse_rational(text);
  if (f == Field::Complex) return Scalar(Complex(q.get_d(), 0.0));
  return Scalar(std::move(q)).embed(f);
}

void Scalar::canon() {
  if (auto* q = std::get_if<Rational>(&value_)) {
    q->canonicalize();
  } else if (auto* z = std::get_if<ComplexRational>(&value_)) {
    z->re.canonicalize();
    z->im.canonicalize();
  }
}

const Rational& Scalar::as_rational() const {
  if (auto* q = std::get_if<Rational>(&value_)) return *q;
  throw FieldMismatch("expected a rational scalar, got " +
                      std::string(field_name(field())));
}

const ComplexRational& Scalar::as_complex_rational() const {
  if (auto* z = std::get_if<ComplexRational>(&value_)) return *z;
  throw FieldMismatch("expected a complex-rational scalar, got " +
                      std::string(field_name(field())));
}

Complex Scalar::to_complex() const {
  switch (field()) {
    case Field::Rational: return {std::get<Rational>(value_).get_d(), 0.0};
    case Field::ComplexRational: {
      const auto& z = std::get<ComplexRational>(value_);
      return {z.re.get_d(), z.im.get_d()};
    }
    case Field::Complex: return std::get<Complex>(value_);
  }
  return {};
}

bool Scalar::is_zero() const {
  switch (field()) {
    case Field::Rational: return sgn(std::get<Rational>(value_)) == 0;
    case Field::ComplexRational: {
      const auto& z = std::get<ComplexRational>(value_);
      return sgn(z.re) == 0 && sgn(z.im) == 0;
    }
    case Field::Complex: return std::get<Complex>(value_) == Complex(0.0, 0.0);
  }
  return false;
}

bool Scalar::is_one() const { return *this == one(field()); }

Scalar Scalar::embed(Field target) const {
  Field from = field();
  if (from == target) return *this;
  if (static_cast<int>(target) < static_cast<int>(from))
    throw FieldMismatch("cannot embed " + std::string(field_name(from)) +
                        " into " + std::string(field_name(target)));
  if (target == Field::ComplexRational)
    return Scalar(ComplexRational{std::get<Rational>(value_), Rational(0)});
  return Scalar(to_complex());
}

Scalar Scalar::conj() const {
  switch (field()) {
    case Field::Rational: return *this;
    case Field::ComplexRational: {
      const auto& z = std::get<ComplexRational>(value_);
      return Scalar(ComplexRational{z.re, -z.im});
    }
    case Field::Complex: return Scalar(std::conj(std::get<Complex>(value_)));
  }
  return *this;
}

Scalar Scalar::inverse() const { return one(field()) / *this; }

Scalar Scalar::operator-() const {
  switch (field()) {
    case Field::Rational: return Scalar(Rational(-std::get<Rational>(value_)));
    case Field::ComplexRational: {
      const auto& z = std::get<ComplexRational>(value_);
      return Scalar(ComplexRational{-z.re, -z.im});
    }
    case Field::Complex: return Scalar(-std::get<Complex>(value_));
  }
  return *this;
}

void Scalar::require_same(const Scalar& o, const char* op) const {
  if (field() != o.field())
    throw FieldMismatch(std::string("mixed-field ") + op + " (" +
                        std::string(field_name(field())) + " vs " +
                        std::string(field_name(o.field())) + ")");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o, "addition");
  switch (field()) {
    case Field::Rational: std::get<Rational>(value_) += std::get<Rational>(o.value_); break;
    case Field::ComplexRational: {
      auto& a = std::get<ComplexRational>(value_);
      const auto& b = std::get<ComplexRational>(o.value_);
      a.re += b.re;
      a.im += b.im;
      break;
    }
    case Field::Complex: std::get<Complex>(value_) += std::get<Complex>(o.value_); break;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(o, "subtraction");
  switch (field()) {
    case Field::Rational: std::get<Rational>(value_) -= std::get<Rational>(o.value_); break;
    case Field::ComplexRational: {
      auto& a = std::get<ComplexRational>(value_);
      const auto& b = std::get<ComplexRational>(o.value_);
      a.re -= b.re;
      a.im -= b.im;
      break;
    }
    case Field::Complex: std::get<Complex>(value_) -= std::get<Complex>(o.value_); break;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o, "multiplication");
  switch (field()) {
    case Field::Rational: std::get<Rational>(value_) *= std::get<Rational>(o.value_); break;
    case Field::ComplexRational: {
      auto& a = std::get<ComplexRational>(value_);
      const auto& b = std::get<ComplexRational>(o.value_);
      Rational re = a.re * b.re - a.im * b.im;
      Rational im = a.re * b.im + a.im * b.re;
      a.re = std::move(re);
      a.im = std::move(im);
      break;
    }
    case Field::Complex: std::get<Complex>(value_) *= std::get<Complex>(o.value_); break;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(o, "division");
  if (o.is_zero()) throw DivisionByZero("scalar division by zero");
  switch (field()) {
    case Field::Rational: std::get<Rational>(value_) /= std::get<Rational>(o.value_); break;
    case Field::ComplexRational: {
      auto& a = std::get<ComplexRational>(value_);
      const auto& b = std::get<ComplexRational>(o.value_);
      Rational norm = b.re * b.re + b.im * b.im;
      Rational re = (a.re * b.re + a.im * b.im) / norm;
      Rational im = (a.im * b.re - a.re * b.im) / norm;
      a.re = std::move(re);
      a.im = std::move(im);
      break;
    }
    case Field::Complex: std::get<Complex>(value_) /= std::get<Complex>(o.value_); break;
  }
  return *this;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field() != o.field()) return false;
  switch (field()) {
    case Field::Rational: return std::get<Rational>(value_) == std::get<Rational>(o.value_);
    case Field::ComplexRational:
      return std::get<ComplexRational>(value_) == std::get<ComplexRational>(o.value_);
    case Field::Complex: return std::get<Complex>(value_) == std::get<Complex>(o.value_);
  }
  return false;
}

std::string Scalar::to_string() const {
  switch (field()) {
    case Field::Rational: return rational_to_string(std::get<Rational>(value_));
    case Field::ComplexRational: {
      const auto& z = std::get<ComplexRational>(value_);
      if (sgn(z.im) == 0) return rational_to_string(z.re);
      std::string im = rational_to_string(Rational(::abs(z.im)));
      std::string sign = sgn(z.im) < 0 ? "-" : "+";
      if (sgn(z.re) == 0) return (sgn(z.im) < 0 ? "-" : "") + im + "i";
      return rational_to_string(z.re) + sign + im + "i";
    }
    case Field::Complex: {
      Complex z = std::get<Complex>(value_);
      char buf[64];
      std::snprintf(buf, sizeof buf, "(%.17g,%.17g)", z.real(), z.imag());
      return buf;
    }
  }
  return "?";
}

bool Scalar::canonical_less(const Scalar& a, const Scalar& b) {
  a.require_same(b, "comparison");
  switch (a.field()) {
    case Field::Rational: return a.as_rational() < b.as_rational();
    case Field::ComplexRational: {
      const auto& x = a.as_complex_rational();
      const auto& y = b.as_complex_rational();
      if (x.re != y.re) return x.re < y.re;
      return x.im < y.im;
    }
    case Field::Complex: {
      Complex x = a.to_complex(), y = b.to_complex();
      if (x.real() != y.real()) return x.real() < y.real();
      return x.imag() < y.imag();
    }
  }
  return false;
}

}  // namespace tlfiber
