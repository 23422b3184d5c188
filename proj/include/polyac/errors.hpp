#pragma once

#include <stdexcept>
#include <string>

namespace polyac {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct NotPrime : Error {
  explicit NotPrime(const std::string& msg) : Error(msg) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

struct DegreeTooHigh : Error {
  explicit DegreeTooHigh(const std::string& msg) : Error(msg) {}
};

struct LengthMismatch : Error {
  explicit LengthMismatch(const std::string& msg) : Error(msg) {}
};

struct InvalidParams : Error {
  explicit InvalidParams(const std::string& msg) : Error(msg) {}
};

struct CyclicGraph : Error {
  explicit CyclicGraph(const std::string& msg) : Error(msg) {}
};

/// A configurable resource cap was hit.  The computation was aborted
/// before producing a result; this is never a wrong answer.
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

struct PrimeCapExceeded : Error {
  explicit PrimeCapExceeded(const std::string& msg) : Error(msg) {}
};

struct DegenerateSystem : Error {
  explicit DegenerateSystem(const std::string& msg) : Error(msg) {}
};

struct NotASquare : Error {
  explicit NotASquare(const std::string& msg) : Error(msg) {}
};

struct ZeroPolynomial : Error {
  explicit ZeroPolynomial(const std::string& msg) : Error(msg) {}
};

}  // namespace polyac
