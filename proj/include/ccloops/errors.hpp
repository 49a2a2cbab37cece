#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ccl {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed Coxeter matrix. Carries the offending (0-based) entry.
class DiagramError : public Error {
 public:
  DiagramError(const std::string& what, int row, int col)
      : Error(what), row_(row), col_(col) {}
  int row() const { return row_; }
  int col() const { return col_; }

 private:
  int row_;
  int col_;
};

// Text input that cannot be parsed. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// An enumeration cap or search budget was exhausted.
class ResourceLimitError : public Error {
 public:
  ResourceLimitError(const std::string& what, std::int64_t partial)
      : Error(what), partial_(partial) {}
  // Elements found / nodes visited when the limit was hit.
  std::int64_t partial() const { return partial_; }

 private:
  std::int64_t partial_;
};

// Input violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace ccl
