#pragma once

#include <cstdint>
#include <vector>

#include "fragmerge/knowledge_base.hpp"
#include "fragmerge/model_set.hpp"

namespace fragmerge {

/// One application of the fragment's closure rule:
///   Horn adds pairwise intersections, Krom adds bitwise majorities of
///   triples, 1CNF adds pairwise intersections, unions and everything in
///   between comparable pairs. Full is the identity.
ModelSet closure_step(const ModelSet& ms, Fragment f);

/// Least fixpoint of closure_step containing ms.
ModelSet closure(const ModelSet& ms, Fragment f);

/// A model set is expressible in a fragment iff it is already closed.
bool is_expressible(const ModelSet& ms, Fragment f);

/// Every syntactically valid clause of the fragment over the universe, in a
/// canonical (width, literals) order. Guarded against exponential blowup on
/// wide universes.
std::vector<Clause> fragment_clauses(const AtomUniverse& universe, Fragment f);

/// Builds a KB of fragment f whose models are exactly `ms`, which must be
/// closed. The clause set is the subsumption-pruned conjunction of all
/// fragment clauses satisfied by every member; no further minimization.
KnowledgeBase synthesize_kb(const ModelSet& ms, Fragment f);

// Dense engine for small working universes (at most 6 atoms): a set of
// interpretations is one bit per interpretation index in a 64-bit word.
// This is what the exhaustive searcher runs on.
namespace dense {

using SetMask = std::uint64_t;
constexpr int kMaxAtoms = 6;

struct ClauseTable {
  int n_atoms = 0;
  std::vector<Clause> clauses;     // all fragment clauses over n_atoms
  std::vector<SetMask> models;     // models[i] = model mask of clauses[i]
  SetMask everything = 0;          // all 2^n_atoms interpretations

  /// Least closed superset: intersection of the model masks of all clauses
  /// the set already satisfies. Agrees with the fixpoint closure.
  SetMask close(SetMask s) const;
};

ClauseTable make_clause_table(int n_atoms, Fragment f);

/// All closed sets (including the empty one) as the intersection closure of
/// the clause model masks, sorted ascending. Aborts past `limit` entries.
std::vector<SetMask> enumerate_closed_sets(const ClauseTable& table, std::uint64_t limit);

SetMask to_mask(const ModelSet& ms);
ModelSet from_mask(SetMask s, const AtomUniverse& universe);

} // namespace dense

} // namespace fragmerge
