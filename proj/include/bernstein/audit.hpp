#pragma once

// Mechanical check of the identities satisfied (or not) by the unified family.
//
// Each identity is evaluated exactly on both sides for every n <= n_max,
// every index in the set and n_max+1 distinct rational samples of x. Since
// both sides are polynomials of degree <= n_max in x, agreement on those
// samples certifies the identity for the checked (n, index) pairs.

#include <optional>
#include <string>
#include <vector>

#include "bernstein/rational.hpp"
#include "bernstein/unified.hpp"

namespace bernstein {

enum class AuditStatus { Holds, Fails };

struct Counterexample {
  long n;
  long b;
  long s;
  long k;
  Rational x;
  Rational lhs;
  Rational rhs;
};

struct AuditEntry {
  std::string identity;
  /// "implemented" for the form the library relies on, "as_printed" for a
  /// literal transcription kept to document a discrepancy.
  std::string variant;
  AuditStatus status;
  long checks;
  std::optional<Counterexample> counterexample;
};

struct AuditReport {
  std::vector<AuditEntry> entries;

  const AuditEntry* find(const std::string& identity) const;
  /// JSON array of {identity, variant, status, checks, counterexample?}.
  std::string to_json() const;
};

/// b, s in {1,2,3} with k = b*s, ordered by (b, s).
std::vector<UnifiedIndex> default_index_set();

/// `count` distinct rationals in (0,1): 1/2, 1/3, 2/3, 1/4, 3/4, 1/5, ...
std::vector<Rational> audit_samples(std::size_t count);

/// Throws std::invalid_argument for n_max < 1 or an empty index set.
AuditReport audit_identities(long n_max, const std::vector<UnifiedIndex>& idx_set = default_index_set());

}  // namespace bernstein
