#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gfactor {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text did not match the expected grammar.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A presentation whose relations are not compatible with its ordering.
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

/// Operation applied outside its domain: zero or scalar input, operands from
/// different algebras, missing weight vector, and similar.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace gfactor
