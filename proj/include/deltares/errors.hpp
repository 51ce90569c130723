#pragma once

#include <stdexcept>
#include <string>

namespace deltares {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested index exceeds a precomputed table.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Input lies outside the domain where a method is valid
/// (series regime, zero argument, bad parameters).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iteration or series failed to converge.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last_residual)
      : Error(what), last_residual_(last_residual) {}
  double last_residual() const noexcept { return last_residual_; }

 private:
  double last_residual_;
};

/// Halley iteration left the strip of the requested Lambert W branch.
class BranchJumpError : public Error {
 public:
  using Error::Error;
};

/// Exponential argument too large to evaluate safely.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at (or numerically on) a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

}  // namespace deltares
