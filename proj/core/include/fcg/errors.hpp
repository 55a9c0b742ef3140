#pragma once

#include <stdexcept>
#include <string>

namespace fcg {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed descriptors, files, words or elements from the wrong group.
class InputError : public Error {
public:
  using Error::Error;
};

/// Files that cannot be found, read or written.
class IoError : public Error {
public:
  using Error::Error;
};

/// A stated precondition (normality, membership, finiteness) does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A theorem hypothesis checked at runtime is false; carries the witness.
class HypothesisError : public PreconditionError {
public:
  HypothesisError(const std::string& what, std::string witness)
      : PreconditionError(what + (witness.empty() ? "" : " (witness " + witness + ")")),
        witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

private:
  std::string witness_;
};

/// A computation could not finish: overflow, budget exhaustion, or a
/// runtime certificate that failed to verify.
class ComputationError : public Error {
public:
  using Error::Error;
};

class ArithmeticOverflow : public ComputationError {
public:
  ArithmeticOverflow() : ComputationError("64-bit integer overflow in exact arithmetic") {}
};

/// A step of a constructive proof failed its runtime verification.
class ProofStepFailure : public ComputationError {
public:
  ProofStepFailure(std::string step, const std::string& detail)
      : ComputationError("proof step '" + step + "' failed: " + detail), step_(std::move(step)) {}

  const std::string& step() const noexcept { return step_; }

private:
  std::string step_;
};

}  // namespace fcg
