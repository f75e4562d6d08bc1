#pragma once

// Interpolation function of the unified family over complex z:
//
//   I(z; x) = (-1)^k (z)_k / k! * w x^k (1-x)^(-z-k),
//
// where (z)_k is the rising factorial. I(-n; x) = S_n(k, x) for n >= k.

#include <complex>
#include <cstddef>

#include "bernstein/rational.hpp"
#include "bernstein/unified.hpp"

namespace bernstein {

using ComplexValue = std::complex<double>;

/// Composite Gauss-Legendre over [0, T] for the Mellin integral.
struct QuadratureConfig {
  std::size_t nodes = 64;       ///< points per panel, >= 8
  double truncation = 0.0;      ///< upper limit in t; 0 picks one from the tail bound
  std::size_t initial_panels = 4;
  double tolerance = 1e-9;      ///< stop when successive doublings differ by less (relative)
  std::size_t max_doublings = 12;
};

/// Throws DivergenceError at x = 1, std::invalid_argument for x outside [0,1].
ComplexValue interp_eval(ComplexValue z, const UnifiedIndex& idx, const Rational& x);

/// Exact value of the interpolation function at z = -n (0 when n < k).
Rational interp_at_negative_integer(long n, const UnifiedIndex& idx, const Rational& x);

/// (-1)^k w x^k / (k B(z,k) (1-x)^(z+k)) via log-gamma. Needs Re z > 0 and k >= 1.
ComplexValue beta_form(ComplexValue z, const UnifiedIndex& idx, const Rational& x);

/// (1/Gamma(z)) int_0^inf t^(z-1) F(-t) dt by quadrature, F the generating
/// function. Needs Re z > 0 and x in [0,1). Throws TailBoundError when a fixed
/// truncation cuts off a non-negligible tail.
ComplexValue mellin_verify(ComplexValue z, const UnifiedIndex& idx, const Rational& x,
                           const QuadratureConfig& cfg = {});

/// n! (1/2 pi i) \oint F(t) t^(-n-1) dt by the M-point trapezoidal rule on
/// |t| = radius. Needs radius > 0 and M >= 2(n+1).
ComplexValue contour_coefficient(long n, const UnifiedIndex& idx, const Rational& x, double radius,
                                 std::size_t nodes);

}  // namespace bernstein
