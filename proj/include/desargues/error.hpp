#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace desargues {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  AlreadySquare,
  CharacteristicTwo,
  NotPrime,
  ZeroVector,
  DegenerateConfiguration,
  ZeroForm,
  SingularMatrix,
  DegenerateForm,
  DependentPairs,
  DegenerateComplement,
  DimensionMismatch,
  ZeroCoefficients,
  NotSymmetric,
  ProportionalPencil,
  DependentLine,
  NotRegular,
  ContractViolation,
  HypothesisViolation,
  DegeneratePosition,
  ParseError,
  SchemaError,
  InvariantError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code identifies the violated
/// precondition; the message carries the offending values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace desargues
