#pragma once

#include <vector>

#include "bernstein/rational.hpp"

namespace bernstein {

/// Polynomial in x stored in the monomial basis (index = power).
/// Trailing zero coefficients are allowed and ignored by comparisons.
class PolynomialInX {
 public:
  PolynomialInX() = default;
  explicit PolynomialInX(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^i (zero past the stored range).
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  bool is_zero() const;
  /// Highest power with a nonzero coefficient; 0 for the zero polynomial.
  std::size_t degree() const;

  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  PolynomialInX derivative() const;

  PolynomialInX& operator+=(const PolynomialInX& o);
  PolynomialInX& operator-=(const PolynomialInX& o);
  PolynomialInX& operator*=(const Rational& c);
  friend PolynomialInX operator+(PolynomialInX a, const PolynomialInX& b) { return a += b; }
  friend PolynomialInX operator-(PolynomialInX a, const PolynomialInX& b) { return a -= b; }
  friend PolynomialInX operator*(PolynomialInX a, const Rational& c) { return a *= c; }

  friend bool operator==(const PolynomialInX& a, const PolynomialInX& b);

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace bernstein
