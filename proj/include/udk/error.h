#pragma once

#include <stdexcept>
#include <string>

namespace udk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in Q(sqrt3)") {}
};

/// Malformed drawing file; `where` names the line or field.
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// Input violates a drawing invariant (non-unit edge, overlap, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Tangential contact or collinear overlap between edges.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// An internal certificate contradicts what the construction guarantees.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

class SizeLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace udk
