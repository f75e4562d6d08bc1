#include "bernstein/audit.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "bernstein/interpolation.hpp"
#include "bernstein/operator.hpp"
#include "bernstein/series.hpp"
#include "bernstein/special_numbers.hpp"

namespace bernstein {
namespace {

struct Check {
  long n;
  const UnifiedIndex* idx;
  const Rational* x;
  Rational lhs;
  Rational rhs;
  bool degenerate = false;
};

// Accumulates checks for one identity, keeping the first failure and the
// first failure that is not degenerate (one side vanishing identically).
class Tally {
 public:
  Tally(std::string identity, std::string variant) : identity_(std::move(identity)), variant_(std::move(variant)) {}

  void add(Check c) {
    ++checks_;
    if (c.lhs == c.rhs) return;
    auto ce = Counterexample{c.n, c.idx->b(), c.idx->s(), c.idx->k(), *c.x, std::move(c.lhs), std::move(c.rhs)};
    if (!first_) first_ = ce;
    if (!c.degenerate && !first_nondegenerate_) first_nondegenerate_ = std::move(ce);
  }

  AuditEntry finish() && {
    AuditEntry e{std::move(identity_), std::move(variant_), AuditStatus::Holds, checks_, std::nullopt};
    if (first_) {
      e.status = AuditStatus::Fails;
      e.counterexample = first_nondegenerate_ ? std::move(first_nondegenerate_) : std::move(first_);
    }
    return e;
  }

 private:
  std::string identity_;
  std::string variant_;
  long checks_ = 0;
  std::optional<Counterexample> first_;
  std::optional<Counterexample> first_nondegenerate_;
};

}  // namespace

const AuditEntry* AuditReport::find(const std::string& identity) const {
  for (const auto& e : entries)
    if (e.identity == identity) return &e;
  return nullptr;
}

std::string AuditReport::to_json() const {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json item;
    item["identity"] = e.identity;
    item["variant"] = e.variant;
    item["status"] = e.status == AuditStatus::Holds ? "HOLDS" : "FAILS";
    item["checks"] = e.checks;
    if (e.counterexample) {
      const auto& c = *e.counterexample;
      item["counterexample"] = {{"n", c.n},          {"b", c.b},          {"s", c.s},         {"k", c.k},
                                {"x", c.x.str()},    {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}};
    }
    doc.push_back(std::move(item));
  }
  return doc.dump(2);
}

std::vector<UnifiedIndex> default_index_set() {
  std::vector<UnifiedIndex> out;
  for (long b = 1; b <= 3; ++b)
    for (long s = 1; s <= 3; ++s) out.emplace_back(b, s);
  return out;
}

std::vector<Rational> audit_samples(std::size_t count) {
  std::vector<Rational> out;
  for (long den = 2; out.size() < count; ++den)
    for (long num = 1; num < den && out.size() < count; ++num)
      if (std::gcd(num, den) == 1) out.emplace_back(num, den);
  return out;
}

AuditReport audit_identities(long n_max, const std::vector<UnifiedIndex>& idx_set) {
  if (n_max < 1) throw std::invalid_argument("audit needs n_max >= 1");
  if (idx_set.empty()) throw std::invalid_argument("audit needs at least one index");
  const std::vector<Rational> xs = audit_samples(static_cast<std::size_t>(n_max) + 1);

  // Visits (n, idx, x) in the report order: ascending n, then index set, then samples.
  auto sweep = [&](long n_from, const std::function<void(long, const UnifiedIndex&, const Rational&)>& fn) {
    for (long n = n_from; n <= n_max; ++n)
      for (const auto& idx : idx_set)
        for (const auto& x : xs) fn(n, idx, x);
  };

  AuditReport report;

  {
    Tally t("generating_function", "implemented");
    std::vector<std::vector<std::vector<Rational>>> coeffs;  // [idx][x] -> S_0..S_nmax
    for (const auto& idx : idx_set) {
      auto& per_x = coeffs.emplace_back();
      for (const auto& x : xs) per_x.push_back(series_expand(idx, x, static_cast<std::size_t>(n_max)));
    }
    for (long n = 0; n <= n_max; ++n)
      for (std::size_t i = 0; i < idx_set.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j)
          t.add({n, &idx_set[i], &xs[j], coeffs[i][j][static_cast<std::size_t>(n)], eval_closed(n, idx_set[i], xs[j])});
    report.entries.push_back(std::move(t).finish());
  }
  {
    Tally t("classic_bernstein_reduction", "implemented");
    sweep(0, [&](long n, const UnifiedIndex& idx, const Rational& x) {
      if (idx.s() != 1) return;
      t.add({n, &idx, &x, eval_closed(n, idx, x), g_basis(n, idx.k(), x)});
    });
    report.entries.push_back(std::move(t).finish());
  }
  {
    Tally t("corollary", "as_printed");
    sweep(1, [&](long n, const UnifiedIndex& idx, const Rational& x) {
      if (n < idx.k()) return;
      auto [lhs, rhs] = binomial_shift_sides(n, idx, x);
      t.add({n, &idx, &x, std::move(lhs), std::move(rhs), n - idx.k() < idx.k()});
    });
    report.entries.push_back(std::move(t).finish());
  }
  {
    Tally t("partition_of_unity", "implemented");
    // independent of the index
    for (long n = 0; n <= n_max; ++n)
      for (const auto& x : xs) t.add({n, &idx_set.front(), &x, partition_check(n, x), Rational(1)});
    report.entries.push_back(std::move(t).finish());
  }
  {
    Tally t("operator_reproduces_linear", "implemented");
    const ExactFunction identity{[](const Rational& v) { return v; }, "x"};
    for (long n = 1; n <= n_max; ++n)
      for (const auto& x : xs) t.add({n, &idx_set.front(), &x, apply_operator(identity, n, x), x});
    report.entries.push_back(std::move(t).finish());
  }
  {
    Tally proof("derivative", "implemented");
    Tally printed("derivative_as_printed", "as_printed");
    for (long n = 1; n <= n_max; ++n)
      for (const auto& idx : idx_set) {
        const PolynomialInX formal = to_polynomial(n, idx).derivative();
        const PolynomialInX claimed = derivative(n, idx);
        for (const auto& x : xs) {
          proof.add({n, &idx, &x, formal.evaluate(x), claimed.evaluate(x)});
          if (n >= idx.k()) printed.add({n, &idx, &x, formal.evaluate(x), derivative_mixed_form(n, idx, x)});
        }
      }
    report.entries.push_back(std::move(proof).finish());
    report.entries.push_back(std::move(printed).finish());
  }
  {
    Tally t("recurrence", "implemented");
    sweep(1, [&](long n, const UnifiedIndex& idx, const Rational& x) {
      t.add({n, &idx, &x, eval_recurrence(n, idx, x), eval_closed(n, idx, x)});
    });
    report.entries.push_back(std::move(t).finish());
  }
  {
    Tally eq("umbral_n_eq_k", "implemented");
    Tally gt("umbral_n_gt_k", "implemented");
    Tally printed("umbral_as_printed", "as_printed");
    sweep(0, [&](long n, const UnifiedIndex& idx, const Rational& x) {
      const long k = idx.k();
      if (n == k) eq.add({n, &idx, &x, umbral_sum(n, idx, x), idx.weight() * x.pow(k)});
      if (n > k) {
        gt.add({n, &idx, &x, umbral_sum(n, idx, x), Rational(0)});
        printed.add({n, &idx, &x, umbral_sum_from_next(n, idx, x), Rational(0)});
      }
    });
    report.entries.push_back(std::move(eq).finish());
    report.entries.push_back(std::move(gt).finish());
    report.entries.push_back(std::move(printed).finish());
  }
  {
    Tally t("stirling_bernoulli_connection", "implemented");
    sweep(0, [&](long n, const UnifiedIndex& idx, const Rational& x) {
      if (n < idx.k() || idx.k() != idx.b() * idx.s()) return;
      auto [lhs, rhs] = connection_identity(n, idx, x);
      t.add({n, &idx, &x, std::move(lhs), std::move(rhs)});
    });
    report.entries.push_back(std::move(t).finish());
  }
  {
    Tally t("interpolation_negative_integers", "implemented");
    sweep(0, [&](long n, const UnifiedIndex& idx, const Rational& x) {
      if (n < idx.k()) return;
      t.add({n, &idx, &x, interp_at_negative_integer(n, idx, x), eval_closed(n, idx, x)});
    });
    report.entries.push_back(std::move(t).finish());
  }
  return report;
}

}  // namespace bernstein
