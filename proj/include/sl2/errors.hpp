#pragma once

#include <stdexcept>
#include <string>

namespace sl2 {

// Argument outside the mathematical domain of an operation (u < 1, a pole of
// log-gamma, a divergent integral representation, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Representation index outside the admissible range (m <= l for the discrete
// series, and similar).
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A quadrature or ODE driver could not reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A quotient whose denominator is too small to be trusted.
class InstabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Emits a diagnostic line on the warning sink (stderr unless silenced).
void warn(const std::string& message);
void set_warnings_enabled(bool enabled);

}  // namespace sl2
