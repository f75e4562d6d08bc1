#include <doctest.h>

#include <vector>

#include "bernstein/audit.hpp"
#include "bernstein/unified.hpp"

using namespace bernstein;

namespace {

// Coefficients of t^n/n! in w (x t)^k e^{t(1-x)} / k!, by an explicit
// Cauchy product of the two factor sequences.
std::vector<Rational> generating_oracle(long k, const Rational& w, const Rational& x, long order) {
  std::vector<Rational> left(order + 1, Rational(0)), right(order + 1, Rational(0));
  Rational fact(1);
  for (long i = 1; i <= k; ++i) fact *= Rational(i);
  if (k <= order) left[k] = w * x.pow(k) / fact;
  Rational term(1);
  for (long j = 0; j <= order; ++j) {
    right[j] = term;
    term = term * (Rational(1) - x) / Rational(j + 1);
  }
  std::vector<Rational> out(order + 1, Rational(0));
  Rational nfact(1);
  for (long n = 0; n <= order; ++n) {
    if (n > 0) nfact *= Rational(n);
    Rational c(0);
    for (long i = 0; i <= n; ++i) c += left[i] * right[n - i];
    out[n] = c * nfact;
  }
  return out;
}

std::vector<UnifiedIndex> small_indices() {
  std::vector<UnifiedIndex> out;
  for (long b = 1; b <= 3; ++b)
    for (long s = 1; s <= 3; ++s) out.emplace_back(b, s);
  return out;
}

const std::vector<Rational> kSamples = {Rational(0), Rational(1, 2), Rational(1, 3), Rational(-1, 2),
                                        Rational(3, 2), Rational(7, 11), Rational(1)};

}  // namespace

TEST_CASE("UnifiedIndex weight and default k") {
  CHECK(UnifiedIndex(1, 1).weight() == Rational(1));
  CHECK(UnifiedIndex(1, 2).weight() == Rational(1, 2));
  CHECK(UnifiedIndex(3, 2).weight() == Rational(1, 8));
  CHECK(UnifiedIndex(2, 3).k() == 6);
  CHECK(UnifiedIndex(2, 3, 4).k() == 4);
  CHECK(UnifiedIndex(2, 3, 4).weight() == Rational(1, 16));
  for (long b = 1; b <= 4; ++b)
    for (long s = 1; s <= 4; ++s) CHECK((UnifiedIndex(b, s).weight() == Rational(1)) == (s == 1));
  CHECK_THROWS_AS(UnifiedIndex(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(UnifiedIndex(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(UnifiedIndex(1, 1, -1), std::invalid_argument);
}

TEST_CASE("eval_closed examples") {
  CHECK(eval_closed(2, UnifiedIndex(1, 1), Rational(1, 2)) == Rational(1, 2));
  CHECK(eval_closed(3, UnifiedIndex(1, 2), Rational(1, 2)) == Rational(3, 16));
  for (const auto& x : kSamples) CHECK(eval_closed(3, UnifiedIndex(2, 2), x) == Rational(0));
  CHECK(eval_closed(2, UnifiedIndex(1, 1), Rational(0)) == Rational(0));

  // the same values from the generating-function oracle
  CHECK(generating_oracle(1, 1, Rational(1, 2), 2)[2] == Rational(1, 2));
  CHECK(generating_oracle(2, Rational(1, 2), Rational(1, 2), 3)[3] == Rational(3, 16));
}

TEST_CASE("series_expand examples") {
  CHECK(series_expand(UnifiedIndex(1, 1), Rational(1, 2), 2) == std::vector<Rational>{0, Rational(1, 2), Rational(1, 2)});
  CHECK(series_expand(UnifiedIndex(1, 2), Rational(1, 2), 3) ==
        std::vector<Rational>{0, 0, Rational(1, 8), Rational(3, 16)});
  for (const auto& idx : small_indices())
    for (const auto& c : series_expand(idx, Rational(0), 8)) CHECK(c == Rational(0));
}

TEST_CASE("series_expand agrees with the Cauchy-product oracle and the closed form") {
  for (const auto& idx : small_indices())
    for (const auto& x : kSamples) {
      const auto got = series_expand(idx, x, 14);
      CHECK(got == generating_oracle(idx.k(), idx.weight(), x, 14));
      for (long n = 0; n <= 14; ++n) CHECK(got[n] == eval_closed(n, idx, x));
      for (long n = 0; n < idx.k() && n <= 14; ++n) CHECK(got[n] == Rational(0));
    }
}

TEST_CASE("s = 1 gives the classic Bernstein polynomial") {
  for (long b = 1; b <= 4; ++b)
    for (long n = b; n <= 10; ++n)
      for (const auto& x : kSamples)
        CHECK(eval_closed(n, UnifiedIndex(b, 1), x) ==
              Rational(binomial(n, b)) * x.pow(b) * (Rational(1) - x).pow(n - b));
}

TEST_CASE("eval_recurrence") {
  CHECK(eval_recurrence(2, UnifiedIndex(1, 1, 1), Rational(1, 2)) == Rational(1, 2));
  CHECK(eval_recurrence(0, UnifiedIndex(1, 1, 0), Rational(1, 3)) == Rational(1));
  CHECK(eval_recurrence(3, UnifiedIndex(1, 2, 2), Rational(1, 3)) == Rational(1, 9));
  CHECK(eval_closed(3, UnifiedIndex(1, 2, 2), Rational(1, 3)) == Rational(1, 9));

  for (const auto& idx : small_indices())
    for (long n = 0; n <= 12; ++n)
      for (const auto& x : kSamples) CHECK(eval_recurrence(n, idx, x) == eval_closed(n, idx, x));
  // decremented indices with the weight held fixed
  for (long k = 0; k <= 5; ++k)
    for (long n = 0; n <= 8; ++n)
      CHECK(eval_recurrence(n, UnifiedIndex(2, 3, k), Rational(2, 5)) == eval_closed(n, UnifiedIndex(2, 3, k), Rational(2, 5)));
}

TEST_CASE("to_polynomial") {
  CHECK(to_polynomial(2, UnifiedIndex(1, 1, 1)).coefficients() == std::vector<Rational>{0, 2, -2});
  CHECK(to_polynomial(3, UnifiedIndex(1, 1, 1)).coefficients() == std::vector<Rational>{0, 3, -6, 3});
  CHECK(to_polynomial(2, UnifiedIndex(1, 2)) == PolynomialInX({0, 0, Rational(1, 2)}));
  CHECK(to_polynomial(1, UnifiedIndex(2, 2)).is_zero());

  for (const auto& idx : small_indices())
    for (long n = idx.k(); n <= 12; ++n) {
      const auto p = to_polynomial(n, idx);
      for (const auto& x : kSamples) CHECK(p.evaluate(x) == eval_closed(n, idx, x));
      CHECK(p.degree() == static_cast<std::size_t>(n));
      for (long i = 0; i <= n - idx.k(); ++i)
        CHECK(p.coefficient(idx.k() + i).sign() == (i % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("derivative") {
  CHECK(derivative(2, UnifiedIndex(1, 1, 1)) == PolynomialInX({2, -4}));
  CHECK(derivative(3, UnifiedIndex(1, 2, 2)) == PolynomialInX({0, 3, Rational(-9, 2)}));
  CHECK_THROWS_AS(derivative(0, UnifiedIndex(1, 1)), std::invalid_argument);

  for (long k = 2; k <= 6; ++k) CHECK(derivative(k, UnifiedIndex(1, 1, k)).evaluate(Rational(0)) == Rational(0));

  for (const auto& idx : small_indices())
    for (long n = 1; n <= 15; ++n) CHECK(derivative(n, idx) == to_polynomial(n, idx).derivative());
}

TEST_CASE("derivative agrees with a central difference") {
  const Rational h(1, 1000000);
  for (const auto& idx : small_indices())
    for (long n = std::max(1L, idx.k()); n <= 10; ++n)
      for (const auto& x : {Rational(1, 5), Rational(1, 2), Rational(5, 7)}) {
        const Rational fd = (eval_closed(n, idx, x + h) - eval_closed(n, idx, x - h)) / (Rational(2) * h);
        CHECK((fd - derivative(n, idx).evaluate(x)).abs() < Rational(1, 100000));
      }
}

TEST_CASE("the mixed-degree derivative form disagrees") {
  // d/dx (2x(1-x)) at 1/2 is 0; 2 (S_1(0) - S_2(1)) = 2 (1/2 - 1/2) = 0 also, so use 1/3.
  const UnifiedIndex idx(1, 1);
  const Rational x(1, 3);
  CHECK(derivative_mixed_form(2, idx, x) != derivative(2, idx).evaluate(x));
}

TEST_CASE("umbral sums") {
  CHECK(umbral_sum(2, UnifiedIndex(2, 1), Rational(1, 3)) == Rational(1, 9));
  CHECK(umbral_sum(3, UnifiedIndex(1, 1), Rational(1, 2)) == Rational(0));
  for (long k = 1; k <= 4; ++k) CHECK(umbral_sum(k, UnifiedIndex(1, 1, k), Rational(0)) == Rational(0));
  CHECK_THROWS_AS(umbral_sum(1, UnifiedIndex(1, 2), Rational(1, 2)), std::invalid_argument);

  // brute-force oracle for the n=3, k=1 case: sum_j C(3,j)(-1)^(3-j)(1/2)^(3-j) S_j
  Rational brute(0);
  const Rational x(1, 2);
  for (long j = 1; j <= 3; ++j) {
    Rational term = Rational(binomial(3, j)) * Rational(-1).pow(3 - j) * (Rational(1) - x).pow(3 - j) *
                    Rational(binomial(j, 1)) * x * (Rational(1) - x).pow(j - 1);
    brute += term;
  }
  CHECK(brute == Rational(0));

  // the sum started at j = k+1 is missing the j = k term
  CHECK(umbral_sum_from_next(3, UnifiedIndex(1, 1), x) == Rational(-3, 8));
  CHECK(umbral_sum_from_next(3, UnifiedIndex(1, 1), x) ==
        -(Rational(binomial(3, 1)) * Rational(-1).pow(2) * x * (Rational(1) - x).pow(2)));
  CHECK_THROWS_AS(umbral_sum_from_next(1, UnifiedIndex(1, 1), x), std::invalid_argument);
}

TEST_CASE("umbral collapse for n <= 15, k <= 6") {
  for (long k = 0; k <= 6; ++k)
    for (long s = 1; s <= 2; ++s) {
      const UnifiedIndex idx(1, s, k);
      for (const auto& x : kSamples) {
        CHECK(umbral_sum(k, idx, x) == idx.weight() * x.pow(k));
        for (long n = k + 1; n <= 15; ++n) CHECK(umbral_sum(n, idx, x) == Rational(0));
      }
    }
}

TEST_CASE("binomial shift identity fails as written") {
  const auto sides = binomial_shift_sides(2, UnifiedIndex(1, 1), Rational(1, 2));
  CHECK(sides.lhs == Rational(1));
  CHECK(sides.rhs == Rational(3, 2));
}
