#include "bernstein/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace bernstein {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// Optional leading sign followed by at least one digit.
bool signed_digits(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

[[noreturn]] void malformed(std::string_view text) {
  throw std::invalid_argument("malformed rational literal '" + std::string(text) +
                              "' (expected p/q or integer)");
}

}  // namespace

BigInt BigInt::parse(std::string_view text) {
  if (!signed_digits(text)) malformed(text);
  return BigInt(to_mpz(text));
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.str(); }

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.sign() == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num.raw(), den.raw());
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!signed_digits(num) || !all_digits(den)) malformed(text);
    mpz_class d = to_mpz(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    mpq_class q(to_mpz(num), d);
    q.canonicalize();
    return Rational(std::move(q));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    std::string_view unsigned_whole = whole;
    if (!unsigned_whole.empty() && (unsigned_whole.front() == '-' || unsigned_whole.front() == '+'))
      unsigned_whole.remove_prefix(1);
    if ((unsigned_whole.empty() && frac.empty()) || (!unsigned_whole.empty() && !all_digits(unsigned_whole)) ||
        (!frac.empty() && !all_digits(frac)))
      malformed(text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(std::string(unsigned_whole) + std::string(frac), 10);
    mpq_class q(negative ? mpz_class(-digits) : digits, scale);
    q.canonicalize();
    return Rational(std::move(q));
  }
  if (!signed_digits(text)) malformed(text);
  return Rational(mpq_class(to_mpz(text)));
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite double has no rational value");
  mpq_class q(v);  // exact
  return Rational(std::move(q));
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw std::domain_error("zero raised to a negative power");
    return Rational(1) / pow(-e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(num, den));  // powers of coprime parts stay coprime
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial requires n >= 0");
  if (k < 0 || k > n) return BigInt(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BigInt(std::move(r));
}

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial requires n >= 0");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return BigInt(std::move(r));
}

}  // namespace bernstein
