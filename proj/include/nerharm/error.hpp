#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nerh {

/// Base class for all data-dependent failures. The CLI maps these to exit
/// code 2; anything else (bad flags, unknown subcommands) exits with 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. Carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Tag sequence violates its declared scheme where a valid one was required.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Gold/prediction corpora disagree on sentence count, token count or surface.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

/// Invalid pipeline or format configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace nerh
