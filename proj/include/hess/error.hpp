#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hess {

enum class ErrorCode {
  EmptyInput,
  NotWeaklyIncreasing,
  BelowDiagonal,
  OutOfRange,
  ShapeMismatch,
  KOutOfRange,
  InvalidPartition,
  BasisMismatch,
  DegreeTooLarge,
  NotSymmetric,
  FormMismatch,
  OddDegree,
  SizeMismatch,
  NotSquare,
  DegenerateForm,
  NotInBasis,
  NotPTableau,
  InvalidPair,
  KeyNotFound,
  GuardrailExceeded,
  ParseError,
  NonIntegral,
  NonTerminating,
  Overflow,
  Internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace hess
