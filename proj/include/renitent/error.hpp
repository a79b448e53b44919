#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace renitent {

enum class ErrorCode {
  // input and argument errors
  InvalidArgument,
  ParseError,
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  FieldMismatch,
  LambdaOutOfRange,
  // arithmetic
  DivisionByZero,
  BothZero,
  ZeroPolynomial,
  DegreeTooSmall,
  SingularMatrix,
  // geometry
  EqualPoints,
  NotADirection,
  LineAtInfinity,
  FewerThanTwoLines,
  PointAtInfinity,
  // construction preconditions and theorem hypotheses
  KMaxTooLarge,
  LambdaTooLarge,
  CZero,
  ZeroDifference,
  HypothesisViolation,
  VerticalDirectionPresent,
  LambdaCapExceeded,
  TotalSizeDivisibleByP,
  InconsistentLambda,
  InsufficientPowerSums,
  TooManyDirections,
  DegenerateCurve,
  NoSharpDirection,
  BadLeadingCoefficient,
  HypothesisNotMet,
  CollineationFailure,
  LambdaGEp,
  DuplicatePoints,
  NotEvenCharacteristic,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above;
/// `what()` is "<Code>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

}  // namespace renitent
