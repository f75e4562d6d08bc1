#pragma once

// Normalized basis g_n(j, x) = C(n,j) x^j (1-x)^(n-j) and the operator
// S_n(f)(x) = sum_j f(j/n) g_n(j, x).

#include <functional>
#include <string>
#include <vector>

#include "bernstein/rational.hpp"

namespace bernstein {

/// A function on [0,1] sampled at rational points. Scalar is Rational for
/// exact work or double for general functions.
template <typename Scalar>
struct SampledFunction {
  std::function<Scalar(const Rational&)> evaluator;
  std::string label;

  Scalar operator()(const Rational& x) const { return evaluator(x); }
};

using ExactFunction = SampledFunction<Rational>;
using RealFunction = SampledFunction<double>;

/// 0 for j < 0 or j > n.
Rational g_basis(long n, long j, const Rational& x);

/// sum_{j=0}^n g_n(j, x); always 1.
Rational partition_check(long n, const Rational& x);

/// Needs n >= 1 and x in [0,1]; throws std::invalid_argument otherwise.
/// Exceptions from f propagate as std::invalid_argument naming the node.
template <typename Scalar>
Scalar apply_operator(const SampledFunction<Scalar>& f, long n, const Rational& x);

template <typename Scalar>
struct ConvergenceRow {
  long n;
  Scalar sup_error;
};

/// Max over `grid` of |S_n(f)(x) - f(x)| for every n.
template <typename Scalar>
std::vector<ConvergenceRow<Scalar>> convergence_table(const SampledFunction<Scalar>& f,
                                                      const std::vector<long>& n_values,
                                                      const std::vector<Rational>& grid);

/// "n,sup_error" header, one row per n, 12 significant digits.
template <typename Scalar>
std::string convergence_csv(const std::vector<ConvergenceRow<Scalar>>& rows);

}  // namespace bernstein
