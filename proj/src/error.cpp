#include "hess/error.hpp"

namespace hess {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotWeaklyIncreasing: return "NotWeaklyIncreasing";
    case ErrorCode::BelowDiagonal: return "BelowDiagonal";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::FormMismatch: return "FormMismatch";
    case ErrorCode::OddDegree: return "OddDegree";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::NotInBasis: return "NotInBasis";
    case ErrorCode::NotPTableau: return "NotPTableau";
    case ErrorCode::InvalidPair: return "InvalidPair";
    case ErrorCode::KeyNotFound: return "KeyNotFound";
    case ErrorCode::GuardrailExceeded: return "GuardrailExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::NonTerminating: return "NonTerminating";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      message_(message) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace hess
