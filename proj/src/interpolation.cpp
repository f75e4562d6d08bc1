#include "bernstein/interpolation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bernstein/errors.hpp"
#include "bernstein/numeric.hpp"

namespace bernstein {
namespace {

void check_unit_interval(const Rational& x) {
  if (x == Rational(1)) throw DivergenceError("interpolation function diverges at x = 1");
  if (x < Rational(0) || x > Rational(1))
    throw std::invalid_argument("x must lie in [0,1), got " + x.str());
}

double sign_for(long k) { return k % 2 == 0 ? 1.0 : -1.0; }

// w x^k as a double.
double prefactor(const UnifiedIndex& idx, const Rational& x) {
  return (idx.weight() * x.pow(idx.k())).to_double();
}

}  // namespace

ComplexValue interp_eval(ComplexValue z, const UnifiedIndex& idx, const Rational& x) {
  check_unit_interval(x);
  const long k = idx.k();
  ComplexValue ratio = 1.0;  // (z)_k / k!
  for (long i = 0; i < k; ++i) ratio *= (z + static_cast<double>(i)) / static_cast<double>(i + 1);
  const double log_base = std::log1p(-x.to_double());
  return sign_for(k) * ratio * prefactor(idx, x) * std::exp(-(z + static_cast<double>(k)) * log_base);
}

Rational interp_at_negative_integer(long n, const UnifiedIndex& idx, const Rational& x) {
  check_unit_interval(x);
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const long k = idx.k();
  // (-n)_k / k!, exactly
  Rational ratio(1);
  for (long i = 0; i < k; ++i) ratio *= Rational(i - n, i + 1);
  if (ratio.is_zero()) return ratio;
  // (1-x)^(-z-k) at z = -n
  return Rational(static_cast<long>(sign_for(k))) * ratio * idx.weight() * x.pow(k) *
         (Rational(1) - x).pow(n - k);
}

ComplexValue beta_form(ComplexValue z, const UnifiedIndex& idx, const Rational& x) {
  check_unit_interval(x);
  if (!(z.real() > 0.0)) throw std::invalid_argument("beta form needs Re(z) > 0");
  const long k = idx.k();
  if (k < 1) throw std::invalid_argument("beta form needs k >= 1");
  const double kd = static_cast<double>(k);
  const double log_base = std::log1p(-x.to_double());
  const ComplexValue denom = kd * beta(z, kd) * std::exp((z + kd) * log_base);
  return sign_for(k) * prefactor(idx, x) / denom;
}

ComplexValue mellin_verify(ComplexValue z, const UnifiedIndex& idx, const Rational& x,
                           const QuadratureConfig& cfg) {
  check_unit_interval(x);
  if (!(z.real() > 0.0)) throw std::invalid_argument("Mellin integral needs Re(z) > 0");
  if (cfg.nodes < 8) throw std::invalid_argument("quadrature needs at least 8 nodes per panel");
  if (cfg.initial_panels < 1) throw std::invalid_argument("quadrature needs at least one panel");

  const long k = idx.k();
  const double one_minus_x = 1.0 - x.to_double();
  // After u = t(1-x) the integrand is u^(p-1) e^(-u), p = z + k.
  const ComplexValue p = z + static_cast<double>(k);
  const double a = p.real() - 1.0;  // |integrand| = u^a e^-u

  // Smallest U with U^a e^-U below 1e-16 of the peak magnitude.
  auto log_mag = [a](double u) { return a * std::log(u) - u; };
  const double peak = a > 0.0 ? log_mag(a) : 0.0;
  const double cutoff = peak + std::log(1e-16);
  double needed = std::max(40.0, 2.0 * a + 1.0);
  while (log_mag(needed) > cutoff) needed *= 1.25;

  double upper = needed;
  if (cfg.truncation > 0.0) {
    upper = cfg.truncation * one_minus_x;
    if (upper < needed)
      throw TailBoundError("truncation " + std::to_string(cfg.truncation) +
                           " leaves a non-negligible tail for x = " + x.str() + " (needs t >= " +
                           std::to_string(needed / one_minus_x) + ")");
  }

  if (k >= 1 && x.is_zero()) return 0.0;

  const GaussLegendreRule rule = gauss_legendre(cfg.nodes);
  auto integrand = [&](double u) { return std::exp((p - 1.0) * std::log(u) - u); };
  auto panel = [&](double lo, double hi) {
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    ComplexValue acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      acc += rule.weights[i] * integrand(mid + half * rule.nodes[i]);
    return acc * half;
  };
  auto integrate = [&](std::size_t panels) {
    const double h = upper / static_cast<double>(panels);
    // the panel touching 0 is graded geometrically for the u^(p-1) factor
    ComplexValue acc = 0.0;
    double right = h;
    for (int level = 0; level < 40; ++level) {
      const double left = right * 0.5;
      acc += panel(left, right);
      right = left;
    }
    acc += panel(0.0, right);
    for (std::size_t j = 1; j < panels; ++j) acc += panel(h * static_cast<double>(j), h * static_cast<double>(j + 1));
    return acc;
  };

  std::size_t panels = cfg.initial_panels;
  ComplexValue integral = integrate(panels);
  for (std::size_t d = 0; d < cfg.max_doublings; ++d) {
    panels *= 2;
    const ComplexValue next = integrate(panels);
    const bool done = std::abs(next - integral) <= cfg.tolerance * std::abs(next);
    integral = next;
    if (done) break;
  }

  double inv_kfact = 1.0;
  for (long i = 2; i <= k; ++i) inv_kfact /= static_cast<double>(i);
  const ComplexValue scale = std::exp(-p * std::log(one_minus_x) - log_gamma(z));
  return sign_for(k) * prefactor(idx, x) * inv_kfact * integral * scale;
}

ComplexValue contour_coefficient(long n, const UnifiedIndex& idx, const Rational& x, double radius,
                                 std::size_t nodes) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (!(radius > 0.0)) throw std::invalid_argument("contour radius must be positive");
  if (nodes < 2 * static_cast<std::size_t>(n + 1))
    throw std::invalid_argument("contour needs at least 2(n+1) nodes");

  const long k = idx.k();
  const double c = 1.0 - x.to_double();
  // n!/k! * w x^k, the constant in front of t^(k-n) e^{t(1-x)}
  const double front = std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0)) * prefactor(idx, x);
  const double rpow = std::pow(radius, static_cast<double>(k - n));
  const double two_pi = 2.0 * std::numbers::pi;

  ComplexValue acc = 0.0;
  for (std::size_t j = 0; j < nodes; ++j) {
    const double theta = two_pi * static_cast<double>(j) / static_cast<double>(nodes);
    const ComplexValue t = std::polar(radius, theta);
    acc += std::polar(rpow, theta * static_cast<double>(k - n)) * std::exp(c * t);
  }
  return front * acc / static_cast<double>(nodes);
}

}  // namespace bernstein
