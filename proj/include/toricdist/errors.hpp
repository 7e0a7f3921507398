#pragma once

#include <stdexcept>
#include <string>

namespace toricdist {

enum class ErrorKind {
  TorsionClassGroup,
  RaysDoNotSpan,
  InvalidWeights,
  NegativeHirzebruchParameter,
  LengthMismatch,
  ZeroPolynomial,
  EnumerationCapExceeded,
  UnsupportedFamily,
  ZeroDivisor,
  NotQuasiHomogeneous,
  CodimensionOverflow,
  NotTopDegree,
  IndexOutOfRange,
  MissingChowPresentation,
  InvalidPresentation,
  UnsupportedDegree,
  InvalidDistribution,
  DegreeMismatch,
  ConstantFunction,
  IrrelevantPoint,
  DegenerateExponentMatrix,
  NonzeroSyntheticRemainder,
  CrossCheckMismatch,
  ParseError,
  InvalidInput,
};

const char* kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace toricdist
