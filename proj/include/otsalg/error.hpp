#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace otsalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Codomain of one morphism differs from the domain of the next.
class BoundaryMismatch : public Error {
 public:
  using Error::Error;
};

/// A boundary does not start with the expected state factors.
class FactorizationMismatch : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class VertexOutOfRange : public Error {
 public:
  using Error::Error;
};

class SymbolOutOfAlphabet : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t col, std::string expected)
      : Error(std::to_string(line) + ":" + std::to_string(col) + ": expected " + expected),
        line_(line),
        col_(col),
        expected_(std::move(expected)) {}

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t col_;
  std::string expected_;
};

class TypeError : public Error {
 public:
  TypeError(std::size_t line, std::size_t col, std::string left, std::string right, std::string what)
      : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + what + " (" + left + " vs " +
              right + ")"),
        line_(line),
        col_(col),
        left_(std::move(left)),
        right_(std::move(right)) {}

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }
  const std::string& left() const { return left_; }
  const std::string& right() const { return right_; }

 private:
  std::size_t line_;
  std::size_t col_;
  std::string left_;
  std::string right_;
};

class UnsupportedConstant : public Error {
 public:
  using Error::Error;
};

}  // namespace otsalg
