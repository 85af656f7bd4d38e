#pragma once

#include <stdexcept>
#include <string>

namespace steklov {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested on a coordinate singularity of the hyperspherical chart.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Non star-shaped boundary (radius 1 + eps*rho not positive somewhere).
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Quadrature grid too coarse for the requested integrand.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Work estimate exceeds the configured node cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A numerical post-condition did not hold (non-Hermitian input, no convergence, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Ill-conditioned generalized eigenproblem.
class ConditioningError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace steklov
