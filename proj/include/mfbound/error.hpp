#pragma once

#include <stdexcept>
#include <string>

namespace mfbound {

/// Base class for all library failures.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: wrong shapes, empty inputs, out-of-range parameters.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

/// A numerical computation failed (overflow, singularity, non-convergence).
class ComputationError : public Error {
public:
  using Error::Error;
};

class SingularMatrix : public ComputationError {
public:
  using ComputationError::ComputationError;
};

class Overflow : public ComputationError {
public:
  using ComputationError::ComputationError;
};

/// Divided differences or other quantities grew past a usable range.
class ConditioningError : public ComputationError {
public:
  using ComputationError::ComputationError;
};

/// An iterative method hit its iteration cap. Carries the best estimate
/// available at that point.
class NonConvergence : public ComputationError {
public:
  NonConvergence(const std::string& what, double best_estimate)
      : ComputationError(what), best_estimate_(best_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }

private:
  double best_estimate_;
};

/// Parse or I/O failure in a file format reader.
class FormatError : public Error {
public:
  using Error::Error;
};

}  // namespace mfbound
