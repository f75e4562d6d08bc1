#include "bernstein/numeric.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <utility>
#include <numbers>
#include <stdexcept>

namespace bernstein {
namespace {

constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

std::complex<double> lanczos_log_gamma(std::complex<double> z) {
  std::complex<double> tmp = z + 5.24218750000000000;
  tmp = (z + 0.5) * std::log(tmp) - tmp;
  std::complex<double> ser = 0.999999999999997092;
  std::complex<double> y = z;
  for (double c : kLanczos) {
    y += 1.0;
    ser += c / y;
  }
  return tmp + std::log(2.5066282746310005 * ser / z);
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    const double pi = std::numbers::pi;
    return std::log(pi) - std::log(std::sin(pi * z)) - lanczos_log_gamma(1.0 - z);
  }
  return lanczos_log_gamma(z);
}

std::complex<double> gamma(std::complex<double> z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    return {std::numeric_limits<double>::infinity(), 0.0};
  return std::exp(log_gamma(z));
}

std::complex<double> beta(std::complex<double> a, std::complex<double> b) {
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

std::complex<double> rising_factorial(std::complex<double> z, long k) {
  if (k < 0) throw std::invalid_argument("rising factorial needs k >= 0");
  std::complex<double> r = 1.0;
  for (long i = 0; i < k; ++i) r *= z + static_cast<double>(i);
  return r;
}

GaussLegendreRule gauss_legendre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Gauss-Legendre rule needs n >= 1");
  // Returns (P_n(x), P_n'(x)) by the three-term recurrence.
  auto legendre = [n](double x) {
    double p0 = 1.0, p1 = x;
    for (std::size_t j = 2; j <= n; ++j) {
      const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / static_cast<double>(j);
      p0 = p1;
      p1 = p2;
    }
    return std::pair{p1, static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0)};
  };

  GaussLegendreRule rule{std::vector<double>(n), std::vector<double>(n)};
  const double pi = std::numbers::pi;
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre(x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace bernstein
