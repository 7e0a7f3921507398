#include "toricdist/errors.hpp"

namespace toricdist {

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TorsionClassGroup: return "TorsionClassGroup";
    case ErrorKind::RaysDoNotSpan: return "RaysDoNotSpan";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::NegativeHirzebruchParameter: return "NegativeHirzebruchParameter";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::NotQuasiHomogeneous: return "NotQuasiHomogeneous";
    case ErrorKind::CodimensionOverflow: return "CodimensionOverflow";
    case ErrorKind::NotTopDegree: return "NotTopDegree";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::MissingChowPresentation: return "MissingChowPresentation";
    case ErrorKind::InvalidPresentation: return "InvalidPresentation";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::InvalidDistribution: return "InvalidDistribution";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::ConstantFunction: return "ConstantFunction";
    case ErrorKind::IrrelevantPoint: return "IrrelevantPoint";
    case ErrorKind::DegenerateExponentMatrix: return "DegenerateExponentMatrix";
    case ErrorKind::NonzeroSyntheticRemainder: return "NonzeroSyntheticRemainder";
    case ErrorKind::CrossCheckMismatch: return "CrossCheckMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(kind_name(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

}  // namespace toricdist
