#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tlfiber {

enum class ErrorKind {
  // input errors (CLI exit code 2)
  FieldMismatch,
  ShapeMismatch,
  IndexOutOfRange,
  InvalidWord,
  InvalidDiagram,
  SizeLimit,
  Parse,
  InvalidParameter,
  // mathematical errors (CLI exit code 3)
  DivisionByZero,
  SingularMatrix,
  NotInvertible,
  IrrationalSpectrum,
  InadmissibleMultiplicity,
  ParityObstruction,
  InvalidList,
  BadDimension,
  NotInGamma,
  NumericalFailure,
};

std::string_view kind_name(ErrorKind kind);

inline bool is_math_error(ErrorKind kind) {
  return kind >= ErrorKind::DivisionByZero;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

template <ErrorKind K>
class KindError : public Error {
 public:
  explicit KindError(const std::string& what) : Error(K, what) {}
};

using FieldMismatch = KindError<ErrorKind::FieldMismatch>;
using ShapeMismatch = KindError<ErrorKind::ShapeMismatch>;
using IndexOutOfRange = KindError<ErrorKind::IndexOutOfRange>;
using InvalidWord = KindError<ErrorKind::InvalidWord>;
using InvalidDiagram = KindError<ErrorKind::InvalidDiagram>;
using SizeLimit = KindError<ErrorKind::SizeLimit>;
using ParseError = KindError<ErrorKind::Parse>;
using DivisionByZero = KindError<ErrorKind::DivisionByZero>;
using SingularMatrix = KindError<ErrorKind::SingularMatrix>;
using NotInvertible = KindError<ErrorKind::NotInvertible>;
using IrrationalSpectrum = KindError<ErrorKind::IrrationalSpectrum>;
using InadmissibleMultiplicity =
    KindError<ErrorKind::InadmissibleMultiplicity>;
using ParityObstruction = KindError<ErrorKind::ParityObstruction>;
using InvalidList = KindError<ErrorKind::InvalidList>;
using BadDimension = KindError<ErrorKind::BadDimension>;
using InvalidParameter = KindError<ErrorKind::InvalidParameter>;
using NotInGamma = KindError<ErrorKind::NotInGamma>;
using NumericalFailure = KindError<ErrorKind::NumericalFailure>;

}  // namespace tlfiber
