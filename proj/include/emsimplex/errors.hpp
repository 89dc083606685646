#pragma once

#include <stdexcept>
#include <string>

namespace emsimplex {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact integer arithmetic would wrap; the operation is refused instead.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Histograms (or rows of an instance file) disagree on bin count or mass,
/// or a value is outside its domain (negative count, empty family, ...).
class ShapeMismatchError : public Error {
 public:
  using Error::Error;
};

/// A height sequence decreases somewhere, so it is not a cumulative histogram.
class NotMonotoneError : public Error {
 public:
  using Error::Error;
};

/// The queried dot does not belong to the union of the family members.
class UnknownDotError : public Error {
 public:
  using Error::Error;
};

/// A vertex index is outside 0..d, or two indices that must differ coincide.
class BadIndexError : public Error {
 public:
  using Error::Error;
};

class EmptyFaceError : public Error {
 public:
  using Error::Error;
};

/// The operation divides by the dimension and needs d >= 1.
class DimensionTooSmallError : public Error {
 public:
  using Error::Error;
};

/// Face labelings range over the half-skeleton, so d is capped (default 20).
class DimensionTooLargeError : public Error {
 public:
  using Error::Error;
};

/// The brute-force oracle would enumerate more candidates than its budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

class UnknownExampleError : public Error {
 public:
  using Error::Error;
};

/// Instance file could not be read or opened.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in an instance file; carries the 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
              ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace emsimplex
