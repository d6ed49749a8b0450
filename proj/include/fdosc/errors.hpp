#pragma once

#include <stdexcept>
#include <string>

namespace fdosc {

/// Parameter outside the admissible domain of a model or operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Mismatched or too-small cutoffs / grids.
class SizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A truncated expansion could not meet its tail tolerance.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, std::size_t cutoff, double tail_mass)
      : std::runtime_error(what), cutoff_(cutoff), tail_mass_(tail_mass) {}

  std::size_t cutoff() const noexcept { return cutoff_; }
  double tail_mass() const noexcept { return tail_mass_; }

 private:
  std::size_t cutoff_;
  double tail_mass_;
};

/// Quadrature did not converge, or grids are incompatible.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ill-conditioned least-squares fit in the finite-difference ladder checks.
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fdosc
