#pragma once

#include <stdexcept>
#include <string>

namespace klsum {

enum class ErrorCode {
  NonPrimeCharacteristic,
  ReduciblePolynomial,
  FieldMismatch,
  DivisionByZero,
  NotASubfield,
  ZeroElement,
  ScaleExceeded,
  TowerMismatch,
  RootFindingFailure,
  SizeMismatch,
  NonPolynomialResult,
  NonIntegerResult,
  IndexOutOfRange,
  ZeroParameterT,
  EmptyPartition,
  InvalidPartition,
  SingularInput,
  CompositionMismatch,
  InvalidHypothesis,
  ParseError,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (the sweep driver, the CLI) can map it to a report status or an
/// exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace klsum
