#include "fragmerge/distribute.hpp"

#include <algorithm>
#include <cassert>

#include "fragmerge/error.hpp"
#include "fragmerge/text_io.hpp"

namespace fragmerge {
namespace {

KnowledgeBase singleton_kb(const AtomUniverse& u, Interpretation w, Fragment f) {
  return synthesize_kb(ModelSet(u, {w}), f);
}

KnowledgeBase kb_for(const AtomUniverse& u, std::vector<Interpretation> models, Fragment f) {
  return synthesize_kb(ModelSet(u, std::move(models)), f);
}

std::uint32_t lowest_bit(std::uint32_t mask) {
  assert(mask != 0);
  return mask & -mask;
}

// The d lowest-index atoms of `mask`.
std::uint32_t lowest_bits(std::uint32_t mask, int d) {
  std::uint32_t out = 0;
  for (int i = 0; i < d; ++i) {
    const std::uint32_t b = lowest_bit(mask);
    out |= b;
    mask &= ~b;
  }
  return out;
}

DistributionWitness make_witness(Profile profile, KnowledgeBase constraint, Fragment f,
                                 std::string construction, std::string detail, Distance d,
                                 std::vector<Aggregation> aggs, const ModelSet& target,
                                 int fresh) {
  DistributionWitness w{std::move(profile),
                        std::move(constraint),
                        f,
                        std::move(construction),
                        std::move(detail),
                        d,
                        std::move(aggs),
                        target,
                        target.universe(),
                        fresh,
                        0,
                        false};
  w.max_profile_len = static_cast<int>(w.profile.size());
  verify_witness(w);
  return w;
}

const std::vector<Aggregation> kAllAggregations{Aggregation::Sum, Aggregation::GMax,
                                                Aggregation::GMin};

} // namespace

bool verify_witness(DistributionWitness& w) {
  const AtomUniverse& working = w.profile.universe();
  const ModelSet embedded_target = extend_to(w.target, working);
  bool ok = w.constraint.universe() == working && !w.aggregations.empty();
  // Profile members and the constraint must live in the declared fragment.
  for (std::size_t i = 0; i < w.profile.size(); ++i)
    if (!is_expressible(w.profile[i].models(), w.fragment)) ok = false;
  if (!is_expressible(w.constraint.models(), w.fragment)) ok = false;
  for (Aggregation agg : w.aggregations) {
    const MergeResult result = merge(w.profile, w.constraint, {w.distance, agg});
    if (!(result.models == embedded_target)) ok = false;
    // Every result model must leave the auxiliary atoms false.
    if (!(extend_to(restrict_to(result.models, w.base_universe), working) == result.models))
      ok = false;
  }
  w.verified = ok;
  return ok;
}

DistributionWitness distribute_expressible(const ModelSet& target, Fragment f, Distance d) {
  KnowledgeBase kb = synthesize_kb(target, f);
  Profile profile{std::vector<KnowledgeBase>{kb}};
  return make_witness(std::move(profile), std::move(kb), f, "expressible", "", d,
                      kAllAggregations, target, 0);
}

DistributionWitness distribute_drastic(const ModelSet& target, Fragment f) {
  if (target.empty()) fail(Errc::InconsistentKb, "target must be non-empty");
  if (is_expressible(target, f)) return distribute_expressible(target, f, Distance::Drastic);
  std::vector<KnowledgeBase> bases;
  bases.reserve(target.size());
  for (Interpretation w : target.members()) bases.push_back(singleton_kb(target.universe(), w, f));
  KnowledgeBase mu = synthesize_kb(closure(target, f), f);
  return make_witness(Profile{std::move(bases)}, std::move(mu), f, "drastic", "",
                      Distance::Drastic, kAllAggregations, target, 0);
}

std::optional<int> equidistance(const ModelSet& target, Distance d) {
  std::optional<int> e;
  auto members = target.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const int dij = dist(members[i], members[j], d);
      if (!e) e = dij;
      if (*e != dij) return std::nullopt;
    }
  return e ? e : std::optional<int>(0);
}

DistributionWitness distribute_gmin_equidistant(const ModelSet& target, Fragment f, Distance d) {
  if (target.empty()) fail(Errc::InconsistentKb, "target must be non-empty");
  if (is_expressible(target, f)) return distribute_expressible(target, f, d);
  const std::optional<int> e = equidistance(target, d);
  if (!e) {
    auto members = target.members();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (dist(members[i], members[j], d) != dist(members[0], members[1], d))
          fail(Errc::NotEquidistant,
               "target models are not pairwise equidistant, e.g. " +
                   format_interpretation(members[i], target.universe()) + " vs " +
                   format_interpretation(members[j], target.universe()));
  }
  std::vector<KnowledgeBase> bases;
  for (Interpretation w : target.members()) bases.push_back(singleton_kb(target.universe(), w, f));
  KnowledgeBase mu = synthesize_kb(closure(target, f), f);
  return make_witness(Profile{std::move(bases)}, std::move(mu), f, "gmin", "", d,
                      {Aggregation::GMin}, target, 0);
}

DistributionWitness simplify_krom(const ModelSet& target) {
  if (target.empty()) fail(Errc::InconsistentKb, "target must be non-empty");
  if (is_expressible(target, Fragment::Krom))
    return distribute_expressible(target, Fragment::Krom, Distance::Hamming);

  const int n = static_cast<int>(target.size());
  const AtomUniverse working = target.universe().extended_with_fresh(n);
  const int base_n = target.universe().size();

  // The i-th target model gets every auxiliary atom except its own.
  const std::uint32_t all_fresh = working.full_mask() & ~target.universe().full_mask();
  std::vector<Interpretation> primed;
  primed.reserve(target.size());
  int i = 0;
  for (Interpretation w : target.members()) {
    primed.push_back({w.bits | (all_fresh & ~(1u << (base_n + i)))});
    ++i;
  }

  KnowledgeBase base =
      synthesize_kb(closure(ModelSet(working, std::move(primed)), Fragment::Krom), Fragment::Krom);
  KnowledgeBase mu =
      synthesize_kb(closure(extend_to(target, working), Fragment::Krom), Fragment::Krom);
  return make_witness(Profile{std::vector<KnowledgeBase>{std::move(base)}}, std::move(mu),
                      Fragment::Krom, "krom", "", Distance::Hamming, kAllAggregations, target, n);
}

DistributionWitness distribute_1cnf_gmax_two_models(const ModelSet& target) {
  if (target.size() != 2)
    fail(Errc::WrongModelCount, "construction needs a target with exactly two models");
  if (is_expressible(target, Fragment::OneCnf))
    return distribute_expressible(target, Fragment::OneCnf, Distance::Hamming);

  const ModelSet closed = closure(target, Fragment::OneCnf);
  const std::uint32_t full = target.universe().full_mask();
  std::vector<KnowledgeBase> bases;
  for (Interpretation w : closed.members()) {
    if (target.contains(w)) continue;
    bases.push_back(singleton_kb(target.universe(), {full & ~w.bits}, Fragment::OneCnf));
  }
  KnowledgeBase mu = synthesize_kb(closed, Fragment::OneCnf);
  return make_witness(Profile{std::move(bases)}, std::move(mu), Fragment::OneCnf, "1cnf-gmax", "",
                      Distance::Hamming, {Aggregation::GMax}, target, 0);
}

DistributionWitness simplify_horn_two_models(const ModelSet& target) {
  if (target.size() != 2)
    fail(Errc::WrongModelCount, "construction needs a target with exactly two models");
  if (is_expressible(target, Fragment::Horn))
    return distribute_expressible(target, Fragment::Horn, Distance::Hamming);

  Interpretation w1 = target.members()[0];
  Interpretation w2 = target.members()[1];
  int d1 = std::popcount(w1.bits & ~w2.bits);
  int d2 = std::popcount(w2.bits & ~w1.bits);
  if (d1 > d2) {
    std::swap(w1, w2);
    std::swap(d1, d2);
  }
  // w1 plus the d1 lowest-index atoms it is missing from w2.
  const Interpretation w1_plus{w1.bits | lowest_bits(w2.bits & ~w1.bits, d1)};
  const Interpretation cup = join(w1, w2);

  KnowledgeBase base = kb_for(target.universe(), {w1_plus, cup}, Fragment::Horn);
  KnowledgeBase mu = synthesize_kb(closure(target, Fragment::Horn), Fragment::Horn);
  return make_witness(Profile{std::vector<KnowledgeBase>{std::move(base)}}, std::move(mu),
                      Fragment::Horn, "horn2", "", Distance::Hamming, kAllAggregations, target, 0);
}

DistributionWitness distribute_horn_three_models(const ModelSet& target) {
  if (target.size() != 3)
    fail(Errc::WrongModelCount, "construction needs a target with exactly three models");
  if (is_expressible(target, Fragment::Horn))
    return distribute_expressible(target, Fragment::Horn, Distance::Hamming);

  const Interpretation m0 = target.members()[0];
  const Interpretation m1 = target.members()[1];
  const Interpretation m2 = target.members()[2];
  const bool inc01 = !comparable(m0, m1);
  const bool inc02 = !comparable(m0, m2);
  const bool inc12 = !comparable(m1, m2);
  const int incomparable_pairs = int(inc01) + int(inc02) + int(inc12);

  if (incomparable_pairs == 3)
    fail(Errc::PairwiseIncomparableUnsupported,
         "three pairwise incomparable models are outside this construction");
  // Zero incomparable pairs means a chain, which is Horn-closed and was
  // handled above.
  assert(incomparable_pairs >= 1);

  if (incomparable_pairs == 1) {
    // One incomparable pair (w1, w2); the third model is comparable to both.
    Interpretation w1, w2, w3;
    if (inc01) {
      w1 = m0; w2 = m1; w3 = m2;
    } else if (inc02) {
      w1 = m0; w2 = m2; w3 = m1;
    } else {
      w1 = m1; w2 = m2; w3 = m0;
    }
    const Interpretation cap = meet(w1, w2);
    const std::uint32_t a = lowest_bit(w1.bits & ~w2.bits);
    const std::uint32_t b = lowest_bit(w2.bits & ~w1.bits);

    if (subset_of(w1, w3)) {
      // Both sides of the pair lie below the third model; penalize it with
      // one globally new atom.
      assert(subset_of(w2, w3));
      const AtomUniverse working = target.universe().extended_with_fresh(1);
      const std::uint32_t c = 1u << target.universe().size();
      KnowledgeBase k1 = kb_for(
          working, {{w1.bits | b}, {w2.bits | a}, w3, {cap.bits | a | b}}, Fragment::Horn);
      KnowledgeBase k2 = kb_for(working, {w1, w2, {w3.bits | c}, cap}, Fragment::Horn);
      KnowledgeBase mu =
          synthesize_kb(closure(extend_to(target, working), Fragment::Horn), Fragment::Horn);
      return make_witness(Profile{std::vector<KnowledgeBase>{std::move(k1), std::move(k2)}},
                          std::move(mu), Fragment::Horn, "horn3", "case=1.1", Distance::Hamming,
                          kAllAggregations, target, 1);
    }

    // The third model lies strictly below the pair's intersection; an
    // existing atom separates them.
    assert(subset_of(w3, w1) && subset_of(w3, w2));
    assert(w3 != cap);
    const std::uint32_t c = lowest_bit(cap.bits & ~w3.bits);
    const AtomUniverse& u = target.universe();
    KnowledgeBase k1 = kb_for(
        u, {{w1.bits | b}, {w2.bits | a}, w3, {cap.bits & ~c}, {cap.bits | a | b}}, Fragment::Horn);
    KnowledgeBase k2 = kb_for(u, {w1, {w2.bits | a}, w3, {cap.bits | a}}, Fragment::Horn);
    KnowledgeBase k3 = kb_for(u, {{w1.bits | b}, w2, w3, {cap.bits | b}}, Fragment::Horn);
    KnowledgeBase k4 = kb_for(u, {w1, w2, {w3.bits | c}, cap}, Fragment::Horn);
    KnowledgeBase mu = synthesize_kb(closure(target, Fragment::Horn), Fragment::Horn);
    std::vector<KnowledgeBase> bases{k1, k2, k3, k4, k4};
    return make_witness(Profile{std::move(bases)}, std::move(mu), Fragment::Horn, "horn3",
                        "case=1.2", Distance::Hamming, kAllAggregations, target, 0);
  }

  // Two incomparable pairs: relabel so the comparable pair is (w1 subset w3)
  // and w2 sits in both incomparable pairs.
  Interpretation w1, w2, w3;
  if (!inc01) {
    w1 = m0; w3 = m1; w2 = m2;
  } else if (!inc02) {
    w1 = m0; w3 = m2; w2 = m1;
  } else {
    w1 = m1; w3 = m2; w2 = m0;
  }
  if (!subset_of(w1, w3)) std::swap(w1, w3);
  const std::uint32_t c = lowest_bit(w2.bits & ~w3.bits);
  const std::uint32_t a = lowest_bit(w1.bits & ~w2.bits);
  const Interpretation cap12 = meet(w1, w2);
  const Interpretation cap23 = meet(w2, w3);
  const AtomUniverse& u = target.universe();
  KnowledgeBase k1 = kb_for(
      u, {{w1.bits | c}, w2, {w3.bits | c}, {cap12.bits | c}, {cap23.bits | c}}, Fragment::Horn);
  KnowledgeBase k2 = kb_for(
      u, {w1, {w2.bits | a}, w3, {cap12.bits | a}, {cap23.bits | a}}, Fragment::Horn);
  KnowledgeBase mu = synthesize_kb(closure(target, Fragment::Horn), Fragment::Horn);
  return make_witness(Profile{std::vector<KnowledgeBase>{std::move(k1), std::move(k2)}},
                      std::move(mu), Fragment::Horn, "horn3", "case=2.1", Distance::Hamming,
                      kAllAggregations, target, 0);
}

std::vector<CriticalPair> find_critical_pairs(const ModelSet& target) {
  const ModelSet closed = closure(target, Fragment::OneCnf);
  std::vector<CriticalPair> pairs;
  auto members = closed.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Interpretation u = members[i];
      const Interpretation v = members[j];
      if (comparable(u, v)) continue;
      const bool in_u = target.contains(u);
      const bool in_v = target.contains(v);
      const bool in_cap = target.contains(meet(u, v));
      const bool in_cup = target.contains(join(u, v));
      int case_id = 0;
      Interpretation w1 = u, w2 = v;
      if (in_u && in_v && !in_cap && !in_cup) case_id = 1;
      else if (in_u && in_v && in_cap && !in_cup) case_id = 2;
      else if (in_u && in_v && !in_cap && in_cup) case_id = 3;
      else if (!in_u && !in_v && in_cap && in_cup) case_id = 4;
      else if (in_u && !in_v && in_cap && in_cup) case_id = 5;
      else if (!in_u && in_v && in_cap && in_cup) {
        case_id = 5;
        std::swap(w1, w2);
      }
      if (case_id != 0) pairs.push_back({w1, w2, case_id});
    }
  }
  assert(!pairs.empty() || closed == target);
  return pairs;
}

bool check_cap_cup_lemma(const Profile& profile, Interpretation w1, Interpretation w2) {
  for (const KnowledgeBase& kb : profile.bases())
    if (!is_expressible(kb.models(), Fragment::OneCnf))
      fail(Errc::Not1CnfProfile, "profile base is not 1CNF-expressible");
  int lhs = 0, rhs = 0;
  for (const KnowledgeBase& kb : profile.bases()) {
    lhs += dist_to_kb(w1, kb, Distance::Hamming) + dist_to_kb(w2, kb, Distance::Hamming);
    rhs += dist_to_kb(meet(w1, w2), kb, Distance::Hamming) +
           dist_to_kb(join(w1, w2), kb, Distance::Hamming);
  }
  return lhs == rhs;
}

SearchOutcome distribute_auto(const DistributionTask& task, int jobs) {
  const ModelSet& target = task.target;
  const Fragment f = task.fragment;
  const MergeSpec spec = task.spec;

  if (is_expressible(target, f))
    return {distribute_expressible(target, f, spec.distance), {}};

  if (task.mode == DistributionMode::Simplify) {
    if (f == Fragment::Krom && spec.distance == Distance::Hamming)
      return {simplify_krom(target), {}};
    if (f == Fragment::Horn && spec.distance == Distance::Hamming && target.size() == 2)
      return {simplify_horn_two_models(target), {}};
    return search(task, jobs);
  }

  if (spec.distance == Distance::Drastic) return {distribute_drastic(target, f), {}};
  if (f == Fragment::Krom) return {simplify_krom(target), {}};
  if (f == Fragment::Horn && target.size() == 2) return {simplify_horn_two_models(target), {}};
  if (f == Fragment::Horn && target.size() == 3) {
    auto members = target.members();
    const bool all_incomparable = !comparable(members[0], members[1]) &&
                                  !comparable(members[0], members[2]) &&
                                  !comparable(members[1], members[2]);
    if (!all_incomparable) return {distribute_horn_three_models(target), {}};
  }
  if (f == Fragment::OneCnf && spec.aggregation == Aggregation::GMax && target.size() == 2)
    return {distribute_1cnf_gmax_two_models(target), {}};
  if (spec.aggregation == Aggregation::GMin && equidistance(target, spec.distance))
    return {distribute_gmin_equidistant(target, f, spec.distance), {}};
  return search(task, jobs);
}

} // namespace fragmerge
