#pragma once

#include <stdexcept>
#include <string>

namespace f1 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Resource limits.
class CapExceeded : public Error {
 public:
  using Error::Error;
};
class SizeExceeded : public Error {
 public:
  using Error::Error;
};
class SearchSpaceExceeded : public Error {
 public:
  using Error::Error;
};
class OutOfTable : public Error {
 public:
  using Error::Error;
};

// Structural violations.
class NotPrime : public Error {
 public:
  using Error::Error;
};
class IncompatibleGluing : public Error {
 public:
  using Error::Error;
};
class NotEquivariant : public Error {
 public:
  using Error::Error;
};
class NotComposable : public Error {
 public:
  using Error::Error;
};
class BaseMismatch : public Error {
 public:
  using Error::Error;
};
class InvalidSpan : public Error {
 public:
  using Error::Error;
};
class InvalidPrime : public Error {
 public:
  using Error::Error;
};
class NumericDomain : public Error {
 public:
  using Error::Error;
};

// Input language.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int col, const std::string& what)
      : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + what),
        line(line),
        col(col) {}
  int line;
  int col;
};
class SemanticError : public Error {
 public:
  using Error::Error;
};

}  // namespace f1
