#pragma once

#include <stdexcept>
#include <string>

namespace srkit {

// Base for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument violates a documented precondition (usage-level mistake).
struct UsageError : Error {
  using Error::Error;
};

struct DeltaMismatch : UsageError {
  DeltaMismatch(unsigned long a, unsigned long b)
      : UsageError("radicand mismatch: sqrt(" + std::to_string(a) +
                   ") vs sqrt(" + std::to_string(b) + ")") {}
};

struct DivisionByZero : UsageError {
  DivisionByZero() : UsageError("division by zero") {}
};

struct EvenN : UsageError {
  explicit EvenN(long n)
      : UsageError("n must be odd (got " + std::to_string(n) + ")") {}
};

struct DegreeOutOfRange : UsageError {
  DegreeOutOfRange(long d, long n)
      : UsageError("degree d=" + std::to_string(d) +
                   " outside [1, log2(n)/3] for n=" + std::to_string(n)) {}
};

struct ParameterRegime : UsageError {
  using UsageError::UsageError;
};

struct ResourceBound : UsageError {
  using UsageError::UsageError;
};

struct MalformedCertificate : Error {
  using Error::Error;
};

// Internal invariant broke; indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace srkit
