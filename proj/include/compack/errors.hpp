#pragma once

#include <stdexcept>
#include <string>

namespace compack {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that violates an operation's precondition (zero polynomial, bad word, ...).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// Interval refinement hit the configured precision cap before a decision was reached.
class PrecisionExhausted : public Error {
 public:
  PrecisionExhausted(const std::string& stage, long bits)
      : Error(stage + ": precision exhausted at " + std::to_string(bits) + " bits"),
        stage_(stage),
        bits_(bits) {}
  const std::string& stage() const { return stage_; }
  long bits() const { return bits_; }

 private:
  std::string stage_;
  long bits_;
};

/// A combinatorial search exceeded its node budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Arithmetic between elements of different algebraic contexts.
class MismatchedBase : public Error {
 public:
  using Error::Error;
};

}  // namespace compack
