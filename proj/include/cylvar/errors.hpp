#pragma once

#include <stdexcept>
#include <string>

namespace cylvar {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain an operation is defined on.
class DomainError : public Error {
public:
  using Error::Error;
};

// Integrand produced a non-finite value at a quadrature node.
class EvaluationError : public Error {
public:
  EvaluationError(double rho, double z, const std::string& what)
      : Error(what + " at (rho=" + std::to_string(rho) + ", z=" + std::to_string(z) + ")"),
        rho_(rho), z_(z) {}

  double rho() const noexcept { return rho_; }
  double z() const noexcept { return z_; }

private:
  double rho_;
  double z_;
};

// Bracketing or iteration failed to locate a root.
class RootError : public Error {
public:
  RootError(const std::string& what, double lo, double hi)
      : Error(what + " in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]"),
        lo_(lo), hi_(hi) {}

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

private:
  double lo_;
  double hi_;
};

class FitError : public Error {
public:
  using Error::Error;
};

// Grid refinement did not reach the requested agreement.
class ResolutionError : public Error {
public:
  using Error::Error;
};

class VerificationError : public Error {
public:
  using Error::Error;
};

class NotImplementedError : public Error {
public:
  using Error::Error;
};

} // namespace cylvar
