#pragma once

#include <stdexcept>
#include <string>

namespace kdual {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different fields, or a value is not representable in the field.
class FieldError : public Error {
 public:
  using Error::Error;
};

/// Matrix shapes do not compose.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A degree window is not certified for the requested computation.
class WindowError : public Error {
 public:
  using Error::Error;
};

/// A quantity that needs a bounded complex was asked of an unbounded one.
class BoundednessError : public Error {
 public:
  using Error::Error;
};

/// Unknown corpus entry, table kind or basis label.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. Carries the 1-based line and column when known (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace kdual
