#pragma once

// Stirling numbers of the second kind and higher-order (Norlund) Bernoulli
// polynomials, plus their connection to the unified family.

#include <cstddef>
#include <map>
#include <mutex>
#include <vector>

#include "bernstein/rational.hpp"
#include "bernstein/series.hpp"
#include "bernstein/unified.hpp"

namespace bernstein {

/// Triangle S(n, v), 0 <= v <= n <= n_max, built by
/// S(n,v) = v S(n-1,v) + S(n-1,v-1).
class StirlingTable {
 public:
  explicit StirlingTable(std::size_t n_max);

  std::size_t n_max() const { return rows_.size() - 1; }
  /// Zero for v > n. Throws std::out_of_range for n > n_max.
  BigInt operator()(std::size_t n, std::size_t v) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

BigInt stirling2(long n, long v);

/// n! [t^n] (e^t - 1)^v / v!
BigInt stirling2_via_series(long n, long v);

/// Evaluates B_n^(v)(x) = n! [t^n] (t/(e^t-1))^v e^{xt}.
///
/// The series (t/(e^t-1))^v is cached per order v and grown on demand; the
/// cache is guarded so one evaluator can be shared between threads.
class HigherBernoulliEvaluator {
 public:
  Rational operator()(long n, long v, const Rational& x) const;

  /// Coefficients of (t/(e^t-1))^v up to at least `order`.
  TruncatedSeries kernel(long v, std::size_t order) const;

 private:
  mutable std::mutex mutex_;
  mutable std::map<long, TruncatedSeries> cache_;
};

Rational bernoulli_higher(long n, long v, const Rational& x);

/// lhs = S_n(k, x) by the closed form; rhs =
/// w x^k sum_j C(n,j) S(j,k) B_{n-j}^(k)(1-x). Requires k = b*s and n >= k.
IdentitySides connection_identity(long n, const UnifiedIndex& idx, const Rational& x);

}  // namespace bernstein
