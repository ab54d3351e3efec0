#pragma once
#include <stdexcept>
#include <string>

namespace jcpt {

// Argument outside the domain of an operation (bad index, dimension mismatch).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Input failed a structural check, e.g. a matrix that is not Hermitian.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Base for failures of the numerics themselves.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConvergenceError : NumericalError {
  ConvergenceError(const std::string& what, double residual)
      : NumericalError(what), residual(residual) {}
  double residual;
};

// A perturbative energy denominator fell below the guard threshold.
struct DegeneracyError : NumericalError {
  using NumericalError::NumericalError;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace jcpt
