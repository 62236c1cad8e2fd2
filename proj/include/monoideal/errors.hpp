#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monoideal {

/// Malformed ideal-file text. Carries a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// An operation was called outside its domain (non-Artinian input where an
/// Artinian one is required, zero divisor, mismatched rings, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two independent computations that must agree did not. Always a bug.
class DisagreementError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace monoideal
