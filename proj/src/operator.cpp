#include "bernstein/operator.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace bernstein {
namespace {

double to_real(const Rational& v) { return v.to_double(); }
double to_real(double v) { return v; }

Rational magnitude(const Rational& v) { return v.abs(); }
double magnitude(double v) { return std::fabs(v); }

template <typename Scalar>
Scalar from_rational(const Rational& v) {
  if constexpr (std::is_same_v<Scalar, Rational>)
    return v;
  else
    return v.to_double();
}

}  // namespace

Rational g_basis(long n, long j, const Rational& x) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (j < 0 || j > n) return Rational(0);
  return Rational(binomial(n, j)) * x.pow(j) * (Rational(1) - x).pow(n - j);
}

Rational partition_check(long n, const Rational& x) {
  Rational acc(0);
  for (long j = 0; j <= n; ++j) acc += g_basis(n, j, x);
  return acc;
}

template <typename Scalar>
Scalar apply_operator(const SampledFunction<Scalar>& f, long n, const Rational& x) {
  if (n < 1) throw std::invalid_argument("operator needs n >= 1");
  if (x < Rational(0) || x > Rational(1)) throw std::invalid_argument("operator needs x in [0,1]");
  Scalar acc = from_rational<Scalar>(Rational(0));
  for (long j = 0; j <= n; ++j) {
    const Rational node(j, n);
    Scalar value;
    try {
      value = f(node);
    } catch (const std::exception& e) {
      throw std::invalid_argument("function '" + f.label + "' undefined at " + node.str() + ": " + e.what());
    }
    acc += value * from_rational<Scalar>(g_basis(n, j, x));
  }
  return acc;
}

template <typename Scalar>
std::vector<ConvergenceRow<Scalar>> convergence_table(const SampledFunction<Scalar>& f,
                                                      const std::vector<long>& n_values,
                                                      const std::vector<Rational>& grid) {
  if (n_values.empty() || grid.empty()) throw std::invalid_argument("convergence table needs nonempty n list and grid");
  std::vector<ConvergenceRow<Scalar>> rows;
  rows.reserve(n_values.size());
  for (long n : n_values) {
    Scalar worst = from_rational<Scalar>(Rational(0));
    for (const Rational& x : grid) {
      Scalar err = magnitude(apply_operator(f, n, x) - f(x));
      if (worst < err) worst = err;
    }
    rows.push_back({n, worst});
  }
  return rows;
}

template <typename Scalar>
std::string convergence_csv(const std::vector<ConvergenceRow<Scalar>>& rows) {
  std::string out = "n,sup_error\n";
  char buf[64];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%ld,%.12g\n", row.n, to_real(row.sup_error));
    out += buf;
  }
  return out;
}

template Rational apply_operator(const ExactFunction&, long, const Rational&);
template double apply_operator(const RealFunction&, long, const Rational&);
template std::vector<ConvergenceRow<Rational>> convergence_table(const ExactFunction&, const std::vector<long>&,
                                                                 const std::vector<Rational>&);
template std::vector<ConvergenceRow<double>> convergence_table(const RealFunction&, const std::vector<long>&,
                                                               const std::vector<Rational>&);
template std::string convergence_csv(const std::vector<ConvergenceRow<Rational>>&);
template std::string convergence_csv(const std::vector<ConvergenceRow<double>>&);

}  // namespace bernstein
