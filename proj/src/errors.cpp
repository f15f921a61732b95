#include "tlfiber/errors.hpp"

namespace tlfiber {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidWord: return "InvalidWord";
    case ErrorKind::InvalidDiagram: return "InvalidDiagram";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::IrrationalSpectrum: return "IrrationalSpectrum";
    case ErrorKind::InadmissibleMultiplicity: return "InadmissibleMultiplicity";
    case ErrorKind::ParityObstruction: return "ParityObstruction";
    case ErrorKind::InvalidList: return "InvalidList";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::NotInGamma: return "NotInGamma";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
  }
  return "Error";
}

}  // namespace tlfiber
