#pragma once

// Floating-point special functions and quadrature rules.

#include <complex>
#include <cstddef>
#include <vector>

namespace bernstein {

/// log Gamma(z) on the principal branch (Lanczos, g = 671/128, with
/// reflection for Re z < 1/2). Accurate to ~1e-15 relative in Gamma.
std::complex<double> log_gamma(std::complex<double> z);

/// Gamma(z) = exp(log_gamma(z)); infinite at the poles 0, -1, -2, ...
std::complex<double> gamma(std::complex<double> z);

/// Euler beta B(a, b) via log-gamma.
std::complex<double> beta(std::complex<double> a, std::complex<double> b);

/// z (z+1) ... (z+k-1); 1 for k = 0.
std::complex<double> rising_factorial(std::complex<double> z, long k);

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(std::size_t n);

}  // namespace bernstein
