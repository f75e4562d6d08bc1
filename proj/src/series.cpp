#include "bernstein/series.hpp"

#include <stdexcept>

namespace bernstein {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t power, std::size_t order) {
  TruncatedSeries s(order);
  if (power <= order) s.coeffs_[power] = 1;
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("series order mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
  const std::size_t order = a.order();
  std::vector<Rational> out(order + 1, Rational(0));
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_exp_linear(const Rational& c, std::size_t order) {
  std::vector<Rational> out(order + 1);
  out[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) out[n] = out[n - 1] * c / Rational(static_cast<long>(n));
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned v) {
  TruncatedSeries result = TruncatedSeries::constant(1, a.order());
  TruncatedSeries base = a;
  while (v > 0) {
    if (v & 1u) result = series_mul(result, base);
    v >>= 1;
    if (v > 0) base = series_mul(base, base);
  }
  return result;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
  if (a[0].is_zero()) throw std::domain_error("reciprocal of a series with zero constant term");
  const std::size_t order = a.order();
  std::vector<Rational> r(order + 1);
  const Rational inv0 = Rational(1) / a[0];
  r[0] = inv0;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc(0);
    for (std::size_t j = 1; j <= n; ++j) acc += a[j] * r[n - j];
    r[n] = -acc * inv0;
  }
  return TruncatedSeries(std::move(r));
}

}  // namespace bernstein
