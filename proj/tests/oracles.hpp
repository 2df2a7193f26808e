#pragma once

// Independent oracles for the property suites. These deliberately avoid the
// code paths they check: the merge oracle aggregates and orders with its own
// arithmetic, the closure oracle goes through satisfied-clause theories
// instead of the step fixpoint, and the critical-pair oracle re-states the
// case table from scratch.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "fragmerge/fragments.hpp"
#include "fragmerge/metrics.hpp"

namespace fragmerge::oracle {

// ---- naive merge -----------------------------------------------------------

struct SemanticProfile {
  // each base as a plain list of model bitmasks
  std::vector<std::vector<std::uint32_t>> bases;
};

inline int oracle_dist(std::uint32_t a, std::uint32_t b, Distance d) {
  if (d == Distance::Drastic) return a == b ? 0 : 1;
  int count = 0;
  for (std::uint32_t x = a ^ b; x; x &= x - 1) ++count;
  return count;
}

inline int oracle_dist_to_base(std::uint32_t w, const std::vector<std::uint32_t>& base,
                               Distance d) {
  int best = oracle_dist(w, base.front(), d);
  for (std::uint32_t m : base) best = std::min(best, oracle_dist(w, m, d));
  return best;
}

inline std::vector<int> oracle_rank(std::vector<int> v, Aggregation agg) {
  switch (agg) {
    case Aggregation::Sum: {
      int total = 0;
      for (int x : v) total += x;
      return {total};
    }
    case Aggregation::GMax:
      std::sort(v.rbegin(), v.rend());
      return v;
    case Aggregation::GMin:
      std::sort(v.begin(), v.end());
      return v;
  }
  return {};
}

/// Two-pass argmin over the constraint models.
inline std::vector<std::uint32_t> naive_merge(const SemanticProfile& profile,
                                              const std::vector<std::uint32_t>& constraint,
                                              Distance d, Aggregation agg) {
  std::vector<std::vector<int>> ranks;
  ranks.reserve(constraint.size());
  for (std::uint32_t w : constraint) {
    std::vector<int> v;
    for (const auto& base : profile.bases) v.push_back(oracle_dist_to_base(w, base, d));
    ranks.push_back(oracle_rank(std::move(v), agg));
  }
  std::vector<std::uint32_t> out;
  if (constraint.empty()) return out;
  const std::vector<int>* best = &ranks.front();
  for (const auto& r : ranks)
    if (r < *best) best = &r;
  for (std::size_t i = 0; i < constraint.size(); ++i)
    if (ranks[i] == *best) out.push_back(constraint[i]);
  return out;
}

// ---- closure through clause theories ---------------------------------------

/// Models of all fragment clauses the set satisfies; for these fragments this
/// is exactly the closure.
inline ModelSet closure_by_theory(const ModelSet& set, Fragment f) {
  const AtomUniverse& u = set.universe();
  const std::uint32_t full = u.full_mask();
  std::vector<Clause> satisfied;
  for (const Clause& c : fragment_clauses(u, f)) {
    bool all = true;
    for (Interpretation m : set.members())
      if (!c.satisfied_by(m, full)) {
        all = false;
        break;
      }
    if (all) satisfied.push_back(c);
  }
  return enumerate_models(u, satisfied);
}

// ---- critical pair case table ----------------------------------------------

/// 0 when the pair is not critical; otherwise the case number, with w1/w2 in
/// the roles the definition assigns.
inline int critical_case(const ModelSet& target, Interpretation w1, Interpretation w2) {
  if (subset_of(w1, w2) || subset_of(w2, w1)) return 0;
  const bool m1 = target.contains(w1);
  const bool m2 = target.contains(w2);
  const bool mc = target.contains(meet(w1, w2));
  const bool mu = target.contains(join(w1, w2));
  if (m1 && m2 && !mc && !mu) return 1;
  if (m1 && m2 && mc && !mu) return 2;
  if (m1 && m2 && !mc && mu) return 3;
  if (!m1 && !m2 && mc && mu) return 4;
  if (m1 && !m2 && mc && mu) return 5;
  return 0;
}

} // namespace fragmerge::oracle
