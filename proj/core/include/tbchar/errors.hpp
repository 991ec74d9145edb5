#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tbchar {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- polynomial arithmetic ---

class VariableSetMismatch : public Error {
 public:
  VariableSetMismatch() : Error("operands live over different variable sets") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero polynomial") {}
};

class NotDivisible : public Error {
 public:
  explicit NotDivisible(const std::string& what) : Error(what) {}
};

class LeadingCoefficientNotUnit : public Error {
 public:
  explicit LeadingCoefficientNotUnit(const std::string& what) : Error(what) {}
};

class ZeroPolynomial : public Error {
 public:
  explicit ZeroPolynomial(const std::string& what) : Error(what) {}
};

class NotUnivariate : public Error {
 public:
  explicit NotUnivariate(const std::string& what) : Error(what) {}
};

// --- text parsing ---

// Syntax problem at a 0-based offset into the input string.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class SyntaxError : public ParseError {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : ParseError(what, position) {}
};

class UnknownVariable : public ParseError {
 public:
  UnknownVariable(const std::string& name, std::size_t position)
      : ParseError("unknown variable '" + name + "'", position) {}
};

// --- link parameters ---

class InvalidParameter : public Error {
 public:
  explicit InvalidParameter(const std::string& what) : Error(what) {}
};

class NotEven : public InvalidParameter {
 public:
  explicit NotEven(long long twop)
      : InvalidParameter("first parameter must be a positive even integer, got " +
                         std::to_string(twop)) {}
};

class OutOfRange : public InvalidParameter {
 public:
  OutOfRange(long long q, long long twop)
      : InvalidParameter("q must satisfy 0 < q < " + std::to_string(twop) +
                         ", got " + std::to_string(q)) {}
};

class NotCoprime : public InvalidParameter {
 public:
  NotCoprime(long long q, long long twop)
      : InvalidParameter("q = " + std::to_string(q) + " and " +
                         std::to_string(twop) + " must be coprime") {}
};

}  // namespace tbchar
