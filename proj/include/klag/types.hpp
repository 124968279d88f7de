#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace klag {

using cplx = std::complex<double>;
using Point = std::vector<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr cplx kI{0.0, 1.0};

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain where the quantity is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a pole (nonpositive integer for Gamma, z in iπℤ for kernels).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The requested (N, a, k) configuration is not covered by a closed formula.
class ScopeError : public Error {
 public:
  using Error::Error;
};

/// A series or iterative procedure did not reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Quadrature order too low for the requested exactness.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

}  // namespace klag
