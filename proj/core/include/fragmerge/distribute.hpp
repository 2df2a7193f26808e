#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fragmerge/fragments.hpp"
#include "fragmerge/merge.hpp"

namespace fragmerge {

enum class DistributionMode { Distribute, Simplify };

struct SearchBounds {
  int max_profile_len = 1;
  int fresh_atoms = 0;
  std::uint64_t node_budget = 100'000'000;  // candidate profiles
};

struct DistributionTask {
  ModelSet target;  // over the base universe, non-empty
  Fragment fragment = Fragment::Horn;
  MergeSpec spec;
  DistributionMode mode = DistributionMode::Distribute;
  SearchBounds bounds;
};

/// A concrete (profile, constraint) pair over a possibly extended universe,
/// together with everything needed to re-check it from scratch. The merge of
/// the profile under the constraint, restricted back to the base universe,
/// must equal the target.
struct DistributionWitness {
  Profile profile;
  KnowledgeBase constraint;
  Fragment fragment;
  std::string construction;  // expressible|drastic|gmin|krom|horn2|horn3|1cnf-gmax|search
  std::string detail;        // e.g. the horn3 case id
  Distance distance = Distance::Hamming;
  std::vector<Aggregation> aggregations;  // aggregations the witness is claimed under
  ModelSet target;                        // over the base universe
  AtomUniverse base_universe;
  int fresh_atoms = 0;
  int max_profile_len = 0;  // the search bound that produced this witness
  bool verified = false;
};

/// Re-runs the merge under every claimed aggregation and checks that the
/// result is exactly the target embedded into the working universe (so all
/// auxiliary atoms are false in every result model). Updates and returns the
/// verified flag.
bool verify_witness(DistributionWitness& w);

/// The trivial witness for fragment-expressible targets: profile and
/// constraint are the same synthesized KB.
DistributionWitness distribute_expressible(const ModelSet& target, Fragment f, Distance d);

/// Drastic distance: one singleton-model KB per target model, constraint is
/// the fragment closure. Works for every fragment and all aggregations.
DistributionWitness distribute_drastic(const ModelSet& target, Fragment f);

/// GMin with pairwise-equidistant targets: singleton-model KBs again; any
/// distance works as long as distinct target models share one positive
/// distance.
DistributionWitness distribute_gmin_equidistant(const ModelSet& target, Fragment f, Distance d);

/// Krom can absorb any target into a single base by extending the universe
/// with one auxiliary atom per target model and penalizing the closure's
/// extra interpretations.
DistributionWitness simplify_krom(const ModelSet& target);

/// 1CNF two-model targets under GMax: one singleton base per closure-minus-
/// target interpretation, each holding that interpretation's complement.
DistributionWitness distribute_1cnf_gmax_two_models(const ModelSet& target);

/// Horn two-model targets under Hamming: a single base with two comparable
/// models straddling the pair.
DistributionWitness simplify_horn_two_models(const ModelSet& target);

/// Horn three-model targets in which at least two models are comparable;
/// the profile shape depends on the comparability pattern.
DistributionWitness distribute_horn_three_models(const ModelSet& target);

struct CriticalPair {
  Interpretation w1, w2;
  int case_id = 0;  // 1..5
};

/// All incomparable pairs from the 1CNF closure of the target whose
/// membership pattern (w1, w2, meet, join) witnesses non-1CNF-
/// expressibility. Empty exactly when the target is 1CNF-expressible.
std::vector<CriticalPair> find_critical_pairs(const ModelSet& target);

/// For profiles of 1CNF-expressible bases under Hamming/Sum the summed
/// distances of any two interpretations equal those of their meet and join.
/// True on every valid input; exposed so the property can be hammered.
bool check_cap_cup_lemma(const Profile& profile, Interpretation w1, Interpretation w2);

struct ExhaustionCertificate {
  int universe_size = 0;  // working universe, including fresh atoms
  int fresh_atoms = 0;
  int max_profile_len = 0;
  std::uint64_t candidates = 0;
  std::uint64_t profiles_examined = 0;
};

struct SearchOutcome {
  std::optional<DistributionWitness> witness;
  ExhaustionCertificate certificate;
};

/// Exhaustive bounded search over profiles of fragment-closed model sets.
/// The constraint is normalized to the fragment closure of the target,
/// auxiliary atoms forced false when the universe is extended. Profiles are
/// enumerated as multisets (all aggregations are order-insensitive) and the
/// canonically least verified witness is returned, independent of the worker
/// count; a none-found outcome is an exhaustion certificate for the bounds.
SearchOutcome search(const DistributionTask& task, int jobs = 1);

/// Picks the cheapest applicable construction for the task, falling back to
/// the bounded search. nullopt means the search exhausted its bounds.
SearchOutcome distribute_auto(const DistributionTask& task, int jobs = 1);

/// The common pairwise distance of the target's models, if there is one and
/// it is positive (vacuously 0 for singletons).
std::optional<int> equidistance(const ModelSet& target, Distance d);

} // namespace fragmerge
