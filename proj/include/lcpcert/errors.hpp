#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcpcert {

// Base of every error raised by the library. Messages are meant for users of
// the CLI, so they name the offending row/column in 1-based terms.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("SingularMatrix: matrix is numerically singular") {}
};

class ZeroDiagonal : public Error {
 public:
  // index is 0-based.
  explicit ZeroDiagonal(std::size_t index)
      : Error("ZeroDiagonal(" + std::to_string(index + 1) + ")"), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("DomainError: " + what) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what)
      : Error("DimensionMismatch: " + what) {}
};

class DimensionTooSmall : public Error {
 public:
  explicit DimensionTooSmall(const std::string& what)
      : Error("DimensionTooSmall: " + what) {}
};

class DimensionTooLarge : public Error {
 public:
  explicit DimensionTooLarge(const std::string& what)
      : Error("DimensionTooLarge: " + what) {}
};

class NoSolution : public Error {
 public:
  NoSolution() : Error("NoSolution: no complementary basis is feasible") {}
};

class InapplicableBound : public Error {
 public:
  explicit InapplicableBound(const std::string& what)
      : Error("InapplicableBound: " + what) {}
};

class PreconditionFailed : public Error {
 public:
  explicit PreconditionFailed(const std::string& what)
      : Error("PreconditionFailed: " + what) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("ParseError(" + std::to_string(line) + ", " + std::to_string(column) +
              "): " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class NonSquare : public Error {
 public:
  explicit NonSquare(const std::string& what) : Error("NonSquare: " + what) {}
};

class EmptyFile : public Error {
 public:
  explicit EmptyFile(const std::string& path) : Error("EmptyFile: " + path) {}
};

}  // namespace lcpcert
