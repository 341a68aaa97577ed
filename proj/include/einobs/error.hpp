#pragma once

#include <stdexcept>
#include <string>

namespace einobs {

enum class ErrorKind {
  kSyntax,
  kUnknownBlock,
  kZeroMultiplicity,
  kParityViolation,
  kInvalidArgument,
  kNonIntegralDimension,
  kCanonicalMismatch,
  kHypothesisUnmet,
  kNotAdmissible,
  kSearchExhausted,
  kIo,
};

const char* to_string(ErrorKind kind);

// Every error carries the rule that raised it, e.g. "parser.block" or
// "obstructions.lebrun". what() is "<rule>: <message>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string rule, const std::string& message);

  ErrorKind kind() const { return kind_; }
  const std::string& rule() const { return rule_; }

  // Parse/usage failures, as opposed to domain failures.
  bool is_input_error() const;

 private:
  ErrorKind kind_;
  std::string rule_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(ErrorKind kind, std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace einobs
