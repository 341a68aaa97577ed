#include "einobs/error.hpp"

namespace einobs {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSyntax: return "SyntaxError";
    case ErrorKind::kUnknownBlock: return "UnknownBlock";
    case ErrorKind::kZeroMultiplicity: return "ZeroMultiplicity";
    case ErrorKind::kParityViolation: return "ParityViolation";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kNonIntegralDimension: return "NonIntegralDimension";
    case ErrorKind::kCanonicalMismatch: return "CanonicalMismatch";
    case ErrorKind::kHypothesisUnmet: return "HypothesisUnmet";
    case ErrorKind::kNotAdmissible: return "NotAdmissible";
    case ErrorKind::kSearchExhausted: return "SearchExhausted";
    case ErrorKind::kIo: return "IoError";
  }
  return "Error";
}

Error::Error(ErrorKind kind, std::string rule, const std::string& message)
    : std::runtime_error(rule + ": " + message), kind_(kind), rule_(std::move(rule)) {}

bool Error::is_input_error() const {
  switch (kind_) {
    case ErrorKind::kSyntax:
    case ErrorKind::kUnknownBlock:
    case ErrorKind::kZeroMultiplicity:
    case ErrorKind::kParityViolation:
    case ErrorKind::kInvalidArgument:
      return true;
    default:
      return false;
  }
}

SyntaxError::SyntaxError(ErrorKind kind, std::size_t position, const std::string& message)
    : Error(kind, "parser", message + " at offset " + std::to_string(position)),
      position_(position) {}

}  // namespace einobs
