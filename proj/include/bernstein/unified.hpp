#pragma once

// The unified Bernstein-type family S_n(k, x) = w * C(n,k) x^k (1-x)^(n-k),
// with weight w = 2^(b(1-s)) and k = b*s by default. S_n vanishes for n < k.
//
// x is never restricted to [0,1] here; all identities are polynomial in x.

#include <cstddef>
#include <vector>

#include "bernstein/polynomial.hpp"
#include "bernstein/rational.hpp"

namespace bernstein {

/// Parameters (b, s, k, weight) of one family member.
///
/// k is carried separately from b*s so that index shifts k -> k-1 in the
/// recurrence and derivative keep the weight fixed.
class UnifiedIndex {
 public:
  /// k = b*s. Throws std::invalid_argument unless b, s >= 1.
  UnifiedIndex(long b, long s);
  /// Explicit basis index k >= 0.
  UnifiedIndex(long b, long s, long k);

  long b() const { return b_; }
  long s() const { return s_; }
  long k() const { return k_; }
  /// 2^(b(1-s)); equals 1 iff s == 1.
  const Rational& weight() const { return weight_; }

  UnifiedIndex with_k(long k) const { return UnifiedIndex(b_, s_, k); }

  friend bool operator==(const UnifiedIndex& a, const UnifiedIndex& b) {
    return a.b_ == b.b_ && a.s_ == b.s_ && a.k_ == b.k_;
  }

 private:
  long b_;
  long s_;
  long k_;
  Rational weight_;
};

/// weight * C(n,k) x^k (1-x)^(n-k), zero when k < 0 or n < k.
Rational scaled_bernstein(long n, long k, const Rational& weight, const Rational& x);

/// Closed form of S_n; 0 for n < k.
Rational eval_closed(long n, const UnifiedIndex& idx, const Rational& x);

/// [S_0, ..., S_order] read off the generating function
/// w (x t)^k e^{t(1-x)} / k! expanded as a truncated series.
std::vector<Rational> series_expand(const UnifiedIndex& idx, const Rational& x, std::size_t order);

/// S_n via S_n(k) = x S_{n-1}(k-1) + (1-x) S_{n-1}(k), weight fixed.
Rational eval_recurrence(long n, const UnifiedIndex& idx, const Rational& x);

/// Monomial coefficients of S_n; zero polynomial when n < k.
PolynomialInX to_polynomial(long n, const UnifiedIndex& idx);

/// d/dx S_n = n (S_{n-1}(k-1) - S_{n-1}(k)). Throws std::invalid_argument for n < 1.
PolynomialInX derivative(long n, const UnifiedIndex& idx);

/// sum_{j=k}^{n} C(n,j) (-1)^(n-j) (1-x)^(n-j) S_j(k, x).
/// Equals w x^k for n == k and 0 for n > k. Throws std::invalid_argument for n < k.
Rational umbral_sum(long n, const UnifiedIndex& idx, const Rational& x);

/// The same sum started at j = k+1, as it is usually printed for n > k.
/// It does not vanish; kept for auditing. Throws for n <= k.
Rational umbral_sum_from_next(long n, const UnifiedIndex& idx, const Rational& x);

/// Right side of the mixed-degree derivative form n (S_{n-1}(k-1) - S_n(k)).
Rational derivative_mixed_form(long n, const UnifiedIndex& idx, const Rational& x);

/// Both sides of C(n,k) S_{n-k}(k) = C(n+k,n) S_n(k).
struct IdentitySides {
  Rational lhs;
  Rational rhs;
};
IdentitySides binomial_shift_sides(long n, const UnifiedIndex& idx, const Rational& x);

}  // namespace bernstein
