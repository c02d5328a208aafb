#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different rings") {}
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable '" + name + "'") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A Groebner computation produced a pair or a term above the configured
/// degree cap.
class DegreeCapExceeded : public Error {
 public:
  explicit DegreeCapExceeded(int degree)
      : Error("degree cap exceeded at degree " + std::to_string(degree)), degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

class ExponentOverflow : public Error {
 public:
  ExponentOverflow() : Error("monomial exponent overflow") {}
};

class Timeout : public Error {
 public:
  Timeout() : Error("computation exceeded its time budget") {}
};

/// Raised by operations that need a positively graded input.
class NotGraded : public Error {
 public:
  explicit NotGraded(const std::string& what) : Error(what) {}
};

/// No Jacobian minor is a nonzerodivisor on the base ring.
class NoWitness : public Error {
 public:
  NoWitness() : Error("no nonzerodivisor minor found: the algebra is not generically smooth") {}
};

}  // namespace tf
