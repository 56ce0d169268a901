#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace weylprice {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inconsistent vector/matrix sizes, or a dimension above the supported cap.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A covariance (or quantum covariance) failed its positivity requirement.
/// Carries the offending smallest eigenvalue for diagnostics.
class AdmissibilityError : public Error {
 public:
  AdmissibilityError(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Tensor quadrature would exceed the configured node budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Integrand produced a non-finite value, or a symbol broke Hermitian symmetry.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input (JSON shape, unknown tags, asymmetric matrices).
class InputError : public Error {
 public:
  using Error::Error;
};

/// %.6g, for numbers quoted in error messages.
inline std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace weylprice
