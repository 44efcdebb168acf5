#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polarity {

/// Base of every error raised by the library. The CLI maps all of them to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point, set, formula or tuple was used at the wrong sort.
class SortError : public Error {
 public:
  using Error::Error;
};

/// A value lies outside the domain of an operation (unknown point, empty carrier, bad size).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A relation, operator or variable name is not declared.
class UnknownNameError : public Error {
 public:
  using Error::Error;
};

/// An argument violates a documented precondition (e.g. a set that must be Galois-stable is not).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would exceed the configured cap. Never reported as a wrong answer.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A lattice operator is not normal for its distribution type.
class NormalityError : public Error {
 public:
  using Error::Error;
};

/// Lexical or syntactic error in formula or file text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace polarity
