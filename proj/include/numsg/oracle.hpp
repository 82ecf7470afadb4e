#pragma once

// Brute-force references for the test suites. Everything here works from
// the definitions on explicit finite membership snapshots and shares no
// code with the library paths it is used to check.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace numsg {

/// Membership of a subset of N on [0, bound].
struct BoundedSet {
  std::int64_t bound = -1;
  std::vector<bool> members;

  /// Throws BoundTooSmall for n > bound.
  bool contains(std::int64_t n) const;

  /// Smallest positive member, or -1 if none is visible.
  std::int64_t smallest_positive() const;

  /// Last non-member plus one. Throws BoundTooSmall unless the snapshot
  /// ends in a run of m(S) consecutive members, which certifies that
  /// nothing above the bound is missing.
  std::int64_t conductor() const;
};

/// <gens> ∩ [0, bound] by saturating dynamic programming.
BoundedSet oracle_closure(std::span<const std::int64_t> gens, std::int64_t bound);

/// {x : dx in members}, on [0, bound/d].
BoundedSet oracle_quotient(const BoundedSet& members, std::int64_t d);

/// Gaps x with x + s in S for every nonzero s < conductor. Needs
/// bound >= 2 * conductor; throws BoundTooSmall otherwise.
std::vector<std::int64_t> oracle_pf(const BoundedSet& members);

using OracleRelation = std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>;

/// Whether the relation moves connect every factorization of n over gens.
bool oracle_congruence_connected(std::span<const std::int64_t> gens,
                                 std::span<const OracleRelation> relations, std::int64_t n);

/// Closure of a coprime generator set, grown until the conductor is
/// certified and the bound reaches 2 * conductor + max(gens).
BoundedSet oracle_snapshot(std::span<const std::int64_t> gens);

struct OracleSummary {
  std::vector<std::int64_t> msg;
  std::int64_t m = 0, frobenius = 0, genus = 0, e = 0, n = 0, c = 0;
};

/// Invariants by definition: gaps counted, msg = generators not in the
/// monoid generated by the others.
OracleSummary oracle_summary(std::span<const std::int64_t> gens);

/// {s in S : s - m not in S}, sorted. Needs bound >= F + m.
std::vector<std::int64_t> oracle_apery(const BoundedSet& members, std::int64_t m);

/// x in S \ {0} that is not a sum of two nonzero members (scan below
/// conductor + m).
std::vector<std::int64_t> oracle_msg(const BoundedSet& members);

/// Mirror test: F - x in S for every gap x.
bool oracle_symmetric(const BoundedSet& members);

/// Minimal generating sets of every numerical semigroup other than N with
/// genus <= max_genus and multiplicity <= max_multiplicity, by walking the
/// tree where a child removes a minimal generator above the Frobenius
/// number.
std::vector<std::vector<std::int64_t>> oracle_semigroups(std::int64_t max_genus,
                                                         std::int64_t max_multiplicity);

}  // namespace numsg
