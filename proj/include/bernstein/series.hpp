#pragma once

// Truncated formal power series in t with exact rational coefficients.

#include <cstddef>
#include <vector>

#include "bernstein/rational.hpp"

namespace bernstein {

class TruncatedSeries {
 public:
  /// Zero series holding coefficients 0..order.
  explicit TruncatedSeries(std::size_t order);
  /// Takes coefficients 0..coeffs.size()-1; order = size-1. Throws if empty.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries constant(const Rational& c, std::size_t order);
  /// The series t^power (zero if power > order).
  static TruncatedSeries monomial(std::size_t power, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& c);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

/// Cauchy product truncated at the shared order. Throws std::invalid_argument
/// when the orders differ.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// exp(c t): coefficient n is c^n / n!.
TruncatedSeries series_exp_linear(const Rational& c, std::size_t order);

/// a^v by repeated squaring; v = 0 gives the constant 1.
TruncatedSeries series_pow(const TruncatedSeries& a, unsigned v);

/// 1/a for a unit-leading series (a[0] != 0). Throws std::domain_error otherwise.
TruncatedSeries series_reciprocal(const TruncatedSeries& a);

}  // namespace bernstein
