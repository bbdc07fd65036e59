#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treeadic {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in a machine file, wreath recursion, or literal.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return message;
    return "line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Structurally valid input that violates a semantic requirement
/// (undefined state, missing transition, unreachable state, ...).
class SemanticError : public Error {
 public:
  using Error::Error;
};

/// Division by d^k hit a nonzero low digit.
class NotDivisibleError : public Error {
 public:
  using Error::Error;
};

/// A Moore machine whose output changes along a 0-transition.
class NotZeroStableError : public Error {
 public:
  using Error::Error;
};

/// An invariant that holds for well-formed inputs failed at runtime.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace treeadic
