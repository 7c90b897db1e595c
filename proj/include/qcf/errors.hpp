#pragma once

#include <stdexcept>
#include <string>

namespace qcf {

/// Raised by exact division when the divisor leaves a nonzero remainder.
struct NotDivisible : std::domain_error {
  using std::domain_error::domain_error;
};

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

/// A Pochhammer index outside the range where the symbol is defined here.
struct IndexError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// A parameter (n, s, n_max, ...) outside the documented domain.
struct InvalidRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// Numeric evaluation requested at |q| >= 1.
struct NonConvergent : std::domain_error {
  using std::domain_error::domain_error;
};

/// A continued-fraction tail or series denominator vanished in floating point.
struct NumericBreakdown : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qcf
