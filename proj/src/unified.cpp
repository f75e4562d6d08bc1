#include "bernstein/unified.hpp"

#include <stdexcept>

#include "bernstein/series.hpp"

namespace bernstein {

UnifiedIndex::UnifiedIndex(long b, long s) : UnifiedIndex(b, s, b * s) {}

UnifiedIndex::UnifiedIndex(long b, long s, long k) : b_(b), s_(s), k_(k) {
  if (b < 1 || s < 1) throw std::invalid_argument("b and s must be positive integers");
  if (k < 0) throw std::invalid_argument("basis index k must be nonnegative");
  weight_ = Rational(2).pow(b * (1 - s));
}

Rational scaled_bernstein(long n, long k, const Rational& weight, const Rational& x) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (k < 0 || n < k) return Rational(0);
  return weight * Rational(binomial(n, k)) * x.pow(k) * (Rational(1) - x).pow(n - k);
}

Rational eval_closed(long n, const UnifiedIndex& idx, const Rational& x) {
  return scaled_bernstein(n, idx.k(), idx.weight(), x);
}

std::vector<Rational> series_expand(const UnifiedIndex& idx, const Rational& x, std::size_t order) {
  const long k = idx.k();
  // w x^k / k! * t^k * e^{t(1-x)}
  TruncatedSeries prefix = TruncatedSeries::monomial(static_cast<std::size_t>(k), order);
  prefix *= idx.weight() * x.pow(k) / Rational(factorial(k));
  const TruncatedSeries gen = series_mul(prefix, series_exp_linear(Rational(1) - x, order));

  std::vector<Rational> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) out[n] = gen[n] * Rational(factorial(static_cast<long>(n)));
  return out;
}

Rational eval_recurrence(long n, const UnifiedIndex& idx, const Rational& x) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const long k = idx.k();
  if (n < k) return Rational(0);
  // row[j] holds S_m(j) for j = 0..k; S_m(-1) = 0.
  std::vector<Rational> row(static_cast<std::size_t>(k) + 1, Rational(0));
  row[0] = idx.weight();
  const Rational one_minus_x = Rational(1) - x;
  for (long m = 1; m <= n; ++m) {
    for (long j = std::min(m, k); j >= 0; --j) {
      Rational next = one_minus_x * row[j];
      if (j > 0) next += x * row[j - 1];
      row[j] = std::move(next);
    }
  }
  return row[k];
}

namespace {

PolynomialInX polynomial_for(long n, long k, const Rational& weight) {
  if (n < 0 || k < 0 || n < k) return PolynomialInX();
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
  const Rational lead = weight * Rational(binomial(n, k));
  for (long i = 0; i <= n - k; ++i) {
    Rational c = lead * Rational(binomial(n - k, i));
    coeffs[k + i] = (i % 2 == 0) ? c : -c;
  }
  return PolynomialInX(std::move(coeffs));
}

Rational signed_power(const Rational& base, long e) {
  Rational r = base.pow(e);
  return e % 2 == 0 ? r : -r;
}

Rational umbral_partial(long n, long from, const UnifiedIndex& idx, const Rational& x) {
  const Rational one_minus_x = Rational(1) - x;
  Rational acc(0);
  for (long j = from; j <= n; ++j)
    acc += Rational(binomial(n, j)) * signed_power(one_minus_x, n - j) * eval_closed(j, idx, x);
  return acc;
}

}  // namespace

PolynomialInX to_polynomial(long n, const UnifiedIndex& idx) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  return polynomial_for(n, idx.k(), idx.weight());
}

PolynomialInX derivative(long n, const UnifiedIndex& idx) {
  if (n < 1) throw std::invalid_argument("derivative requires n >= 1");
  const long k = idx.k();
  return (polynomial_for(n - 1, k - 1, idx.weight()) - polynomial_for(n - 1, k, idx.weight())) *
         Rational(n);
}

Rational umbral_sum(long n, const UnifiedIndex& idx, const Rational& x) {
  if (n < idx.k()) throw std::invalid_argument("umbral sum requires n >= k");
  return umbral_partial(n, idx.k(), idx, x);
}

Rational umbral_sum_from_next(long n, const UnifiedIndex& idx, const Rational& x) {
  if (n <= idx.k()) throw std::invalid_argument("shifted umbral sum requires n > k");
  return umbral_partial(n, idx.k() + 1, idx, x);
}

Rational derivative_mixed_form(long n, const UnifiedIndex& idx, const Rational& x) {
  if (n < 1) throw std::invalid_argument("derivative requires n >= 1");
  const long k = idx.k();
  return Rational(n) * (scaled_bernstein(n - 1, k - 1, idx.weight(), x) - eval_closed(n, idx, x));
}

IdentitySides binomial_shift_sides(long n, const UnifiedIndex& idx, const Rational& x) {
  const long k = idx.k();
  if (n < k) throw std::invalid_argument("identity requires n >= k");
  return {Rational(binomial(n, k)) * eval_closed(n - k, idx, x),
          Rational(binomial(n + k, n)) * eval_closed(n, idx, x)};
}

}  // namespace bernstein
