#include "bernstein/special_numbers.hpp"

#include <stdexcept>

namespace bernstein {

StirlingTable::StirlingTable(std::size_t n_max) : rows_(n_max + 1) {
  rows_[0] = {BigInt(1)};
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto& row = rows_[n];
    const auto& prev = rows_[n - 1];
    row.assign(n + 1, BigInt(0));
    for (std::size_t v = 1; v <= n; ++v) {
      BigInt val = v < n ? BigInt(static_cast<long>(v)) * prev[v] : BigInt(0);
      val += prev[v - 1];
      row[v] = std::move(val);
    }
  }
}

BigInt StirlingTable::operator()(std::size_t n, std::size_t v) const {
  if (n >= rows_.size()) throw std::out_of_range("Stirling table too small");
  return v > n ? BigInt(0) : rows_[n][v];
}

BigInt stirling2(long n, long v) {
  if (n < 0 || v < 0) throw std::invalid_argument("Stirling arguments must be nonnegative");
  if (v > n) return BigInt(0);
  return StirlingTable(static_cast<std::size_t>(n))(n, v);
}

namespace {

// e^t - 1 truncated at `order`.
TruncatedSeries exp_minus_one(std::size_t order) {
  std::vector<Rational> c = series_exp_linear(1, order).coefficients();
  c[0] = 0;
  return TruncatedSeries(std::move(c));
}

}  // namespace

BigInt stirling2_via_series(long n, long v) {
  if (n < 0 || v < 0) throw std::invalid_argument("Stirling arguments must be nonnegative");
  const auto order = static_cast<std::size_t>(n);
  const TruncatedSeries p = series_pow(exp_minus_one(order), static_cast<unsigned>(v));
  const Rational value = p[order] * Rational(factorial(n)) / Rational(factorial(v));
  if (!value.is_integer()) throw std::logic_error("non-integral Stirling coefficient");
  return value.numerator();
}

TruncatedSeries HigherBernoulliEvaluator::kernel(long v, std::size_t order) const {
  if (v < 0) throw std::invalid_argument("Bernoulli order must be nonnegative");
  std::lock_guard lock(mutex_);
  auto it = cache_.find(v);
  if (it == cache_.end() || it->second.order() < order) {
    // (e^t - 1)/t = sum t^n / (n+1)!, unit leading term.
    std::vector<Rational> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) c[n] = Rational(1) / Rational(factorial(static_cast<long>(n) + 1));
    TruncatedSeries k = series_pow(series_reciprocal(TruncatedSeries(std::move(c))), static_cast<unsigned>(v));
    it = cache_.insert_or_assign(v, std::move(k)).first;
  }
  const auto& full = it->second.coefficients();
  return TruncatedSeries(std::vector<Rational>(full.begin(), full.begin() + static_cast<long>(order) + 1));
}

Rational HigherBernoulliEvaluator::operator()(long n, long v, const Rational& x) const {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const TruncatedSeries k = kernel(v, static_cast<std::size_t>(n));
  // n! sum_j k_j x^(n-j)/(n-j)! = sum_j k_j j! C(n,j) x^(n-j)
  Rational acc(0);
  for (long j = 0; j <= n; ++j) {
    if (k[j].is_zero()) continue;
    acc += k[j] * Rational(factorial(j) * binomial(n, j)) * x.pow(n - j);
  }
  return acc;
}

Rational bernoulli_higher(long n, long v, const Rational& x) {
  static const HigherBernoulliEvaluator evaluator;
  return evaluator(n, v, x);
}

IdentitySides connection_identity(long n, const UnifiedIndex& idx, const Rational& x) {
  const long k = idx.k();
  if (k != idx.b() * idx.s()) throw std::invalid_argument("connection identity needs k = b*s");
  if (n < k) throw std::invalid_argument("connection identity requires n >= k");
  const StirlingTable stirling(static_cast<std::size_t>(n));
  const Rational shifted = Rational(1) - x;
  Rational sum(0);
  for (long j = k; j <= n; ++j)  // S(j,k) = 0 for j < k
    sum += Rational(binomial(n, j) * stirling(j, k)) * bernoulli_higher(n - j, k, shifted);
  return {eval_closed(n, idx, x), idx.weight() * x.pow(k) * sum};
}

}  // namespace bernstein
