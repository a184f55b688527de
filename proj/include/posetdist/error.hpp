#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace posetdist {

enum class ErrorCode {
  AntisymmetryViolation,
  NotWeaklyConnected,
  DegeneratePoset,
  CycleDetected,
  NotSimple,
  KindMismatch,
  PropertyViolation,
  NotTransitivelyClosed,
  LabelClassNotPath,
  InvalidMatching,
  PairNotTwisted,
  SizeCapExceeded,
  DegenerateInput,
  TimeLimitExceeded,
  InfeasibleParameters,
  SolverDisagreement,
  ParseError,
  ValidationError,
  UnknownNode,
  DuplicateNode,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the file readers. `line` is 1-based; 0 means the location is a
// JSON field path rather than a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::string field = {})
      : Error(ErrorCode::ParseError, message), line_(line), field_(std::move(field)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

// A file parsed but the graph it describes failed structural validation.
class ValidationError : public Error {
 public:
  ValidationError(ErrorCode cause, const std::string& message)
      : Error(ErrorCode::ValidationError, message), cause_(cause) {}

  ErrorCode cause() const noexcept { return cause_; }

 private:
  ErrorCode cause_;
};

}  // namespace posetdist
