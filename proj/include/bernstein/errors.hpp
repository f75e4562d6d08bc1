#pragma once

#include <stdexcept>

namespace bernstein {

/// Evaluation at a point where the function diverges (x = 1 in the
/// interpolation function).
class DivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The configured quadrature truncation leaves a tail above tolerance.
class TailBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bernstein
