#pragma once

#include <stdexcept>
#include <string>

namespace gsk {

enum class ErrorCode {
  DescriptorMismatch,
  Domain,
  UnknownEmbedding,
  InvalidSampleCount,
  CocycleCheckFailed,
  WrongFactorGroup,
  SingularChart,
  DimensionMismatch,
  NotClosed,
  DomainTruncation,
  NotSeparable,
  IncompatibleEmbedding,
  EmptyGrid,
  Inadmissible,
  MarginalUndefined,
  Parse,
  NoRealization,
};

const char* to_string(ErrorCode code);

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry the 1-based line number of the offending input line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gsk
