#pragma once

#include <stdexcept>
#include <string>

namespace qbarnes {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition was violated. `parameter()` names the offending input.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string parameter, const std::string& what)
      : Error(parameter + ": " + what), parameter_(std::move(parameter)), message_(what) {}

  const std::string& parameter() const noexcept { return parameter_; }
  /// The message without the parameter prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string parameter_;
  std::string message_;
};

/// A factor in a denominator vanished at the requested parameters.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// The evaluation-point budget of a Riemann sum would be exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A p-adic result is indistinguishable from zero at the tracked precision.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace qbarnes
