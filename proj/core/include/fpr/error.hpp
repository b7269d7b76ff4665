#pragma once

#include <stdexcept>
#include <string>

namespace fpr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: dimension mismatches, k out of range, bad partitions.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The input is well formed but outside the preference domain a solver
/// requires (for instance a DP solver handed a profile that is not
/// single-crossing).
class DomainViolation : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would exceed its configured enumeration budget.
class SizeLimit : public Error {
 public:
  using Error::Error;
};

/// Profile or document text could not be parsed.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, int line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace fpr
