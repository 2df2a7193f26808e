#include <doctest.h>

#include "fragmerge/distribute.hpp"
#include "fragmerge/error.hpp"
#include "fragmerge/text_io.hpp"
#include "test_support.hpp"

using namespace fragmerge;
using namespace fragmerge::test;

namespace {

DistributionTask task_for(const ModelSet& target, Fragment f, Distance d, Aggregation a,
                          DistributionMode mode, int max_len, int fresh = 0) {
  return DistributionTask{target, f, {d, a}, mode, {max_len, fresh, 100'000'000}};
}

} // namespace

TEST_CASE("search finds the two-base horn witness for the disjunction") {
  const AtomUniverse u = uni("a,b");
  const ModelSet target = ms(u, {"{a}", "{b}", "{a,b}"});
  const SearchOutcome out = search(task_for(target, Fragment::Horn, Distance::Hamming,
                                            Aggregation::Sum, DistributionMode::Distribute, 2));
  REQUIRE(out.witness);
  CHECK(out.witness->verified);
  CHECK(out.witness->construction == "search");
  CHECK(out.witness->profile.size() == 2);
  for (std::size_t i = 0; i < out.witness->profile.size(); ++i)
    CHECK(is_expressible(out.witness->profile[i].models(), Fragment::Horn));
  CHECK(out.witness->constraint.models() == ModelSet::all(u));
}

TEST_CASE("search result is canonical regardless of worker count") {
  const AtomUniverse u = uni("a,b");
  const ModelSet target = ms(u, {"{a}", "{b}", "{a,b}"});
  const DistributionTask t = task_for(target, Fragment::Horn, Distance::Hamming,
                                      Aggregation::Sum, DistributionMode::Distribute, 2);
  const SearchOutcome one = search(t, 1);
  const SearchOutcome four = search(t, 4);
  REQUIRE(one.witness);
  REQUIRE(four.witness);
  CHECK(one.witness->profile.size() == four.witness->profile.size());
  for (std::size_t i = 0; i < one.witness->profile.size(); ++i)
    CHECK(one.witness->profile[i].models() == four.witness->profile[i].models());
  CHECK(one.witness->constraint.models() == four.witness->constraint.models());
}

TEST_CASE("no unit-fragment sum witness exists for non-expressible targets") {
  const AtomUniverse u = uni("a,b");
  const ModelSet target = ms(u, {"{a}", "{b}"});
  const SearchOutcome out = search(task_for(target, Fragment::OneCnf, Distance::Hamming,
                                            Aggregation::Sum, DistributionMode::Distribute, 3));
  CHECK(!out.witness);
  CHECK(out.certificate.max_profile_len == 3);
  CHECK(out.certificate.fresh_atoms == 0);
  CHECK(out.certificate.candidates == 9);  // the nine non-empty intervals over two atoms
  CHECK(out.certificate.profiles_examined > 0);
}

TEST_CASE("simplify mode restricts profiles to a single base") {
  const AtomUniverse u = uni("a,b");
  const ModelSet target = ms(u, {"{a}", "{b}", "{a,b}"});
  // distributable with two horn bases but not with one
  const SearchOutcome out = search(task_for(target, Fragment::Horn, Distance::Hamming,
                                            Aggregation::Sum, DistributionMode::Simplify, 3));
  CHECK(!out.witness);
  CHECK(out.certificate.max_profile_len == 1);
}

TEST_CASE("drastic simplification search succeeds exactly on expressible targets") {
  const AtomUniverse u = uni("a,b");
  for (Fragment f : {Fragment::Horn, Fragment::Krom, Fragment::OneCnf}) {
    for (std::uint32_t mask = 1; mask < 16; ++mask) {
      const ModelSet target = ms_from_mask(u, mask);
      const SearchOutcome out = search(task_for(target, f, Distance::Drastic, Aggregation::Sum,
                                                DistributionMode::Simplify, 1));
      CHECK(bool(out.witness) == is_expressible(target, f));
      if (out.witness) CHECK(out.witness->verified);
    }
  }
}

TEST_CASE("search is complete for same-universe witnesses within its bounds") {
  // drastic distribution witnesses have normalized constraints and length
  // |target|, so the search must find one for every target
  const AtomUniverse u = uni("a,b");
  for (std::uint32_t mask = 1; mask < 16; ++mask) {
    const ModelSet target = ms_from_mask(u, mask);
    const SearchOutcome out = search(task_for(target, Fragment::Horn, Distance::Drastic,
                                              Aggregation::Sum, DistributionMode::Distribute, 4));
    REQUIRE(out.witness);
    CHECK(out.witness->verified);
  }
}

TEST_CASE("fresh-atom search still finds witnesses that need no fresh atoms") {
  // The gmax pair witness survives embedding, so widening the universe by an
  // auxiliary atom must not lose it.
  const AtomUniverse u = uni("a,b");
  const ModelSet target = ms(u, {"{a}", "{b}"});
  const SearchOutcome out = search(task_for(target, Fragment::OneCnf, Distance::Hamming,
                                            Aggregation::GMax, DistributionMode::Distribute, 2, 1));
  REQUIRE(out.witness);
  CHECK(out.witness->verified);
  CHECK(out.witness->fresh_atoms == 1);
  CHECK(out.witness->profile.universe().size() == 3);
}

TEST_CASE("search bounds are enforced") {
  const AtomUniverse u = uni("a,b");
  const ModelSet target = ms(u, {"{a}"});
  DistributionTask t = task_for(target, Fragment::Full, Distance::Hamming, Aggregation::Sum,
                                DistributionMode::Distribute, 3);
  t.bounds.node_budget = 10;
  CHECK_THROWS_AS(search(t), Error);

  DistributionTask wide = task_for(target, Fragment::Horn, Distance::Hamming, Aggregation::Sum,
                                   DistributionMode::Distribute, 1, 6);
  CHECK_THROWS_AS(search(wide), Error);  // 2 + 6 atoms exceed the dense engine
}

TEST_CASE("auto dispatch picks constructions before searching") {
  const AtomUniverse u = uni("a,b");
  const ModelSet target = ms(u, {"{a}", "{b}", "{a,b}"});

  auto construction_of = [&](Fragment f, Distance d, Aggregation a, DistributionMode m) {
    const SearchOutcome out = distribute_auto(task_for(target, f, d, a, m, 2));
    REQUIRE(out.witness);
    CHECK(out.witness->verified);
    return out.witness->construction;
  };
  CHECK(construction_of(Fragment::Horn, Distance::Drastic, Aggregation::Sum,
                        DistributionMode::Distribute) == "drastic");
  const AtomUniverse u3 = uni("a,b,c");
  const SearchOutcome krom = distribute_auto(
      task_for(ms(u3, {"{a,b}", "{b,c}", "{a,c}"}), Fragment::Krom, Distance::Hamming,
               Aggregation::Sum, DistributionMode::Simplify, 1));
  REQUIRE(krom.witness);
  CHECK(krom.witness->construction == "krom");
  CHECK(construction_of(Fragment::Horn, Distance::Hamming, Aggregation::GMax,
                        DistributionMode::Distribute) == "horn3");
  CHECK(construction_of(Fragment::Full, Distance::Hamming, Aggregation::Sum,
                        DistributionMode::Distribute) == "expressible");
  CHECK(construction_of(Fragment::Horn, Distance::Hamming, Aggregation::Sum,
                        DistributionMode::Distribute) == "horn3");

  const SearchOutcome pair = distribute_auto(task_for(ms(u, {"{a}", "{b}"}), Fragment::OneCnf,
                                                      Distance::Hamming, Aggregation::GMax,
                                                      DistributionMode::Distribute, 2));
  REQUIRE(pair.witness);
  CHECK(pair.witness->construction == "1cnf-gmax");

  const SearchOutcome gmin = distribute_auto(task_for(ms(u, {"{a}", "{b}"}), Fragment::OneCnf,
                                                      Distance::Hamming, Aggregation::GMin,
                                                      DistributionMode::Distribute, 2));
  REQUIRE(gmin.witness);
  CHECK(gmin.witness->construction == "gmin");

  // nothing applies: unit fragment under sum falls back to the search
  const SearchOutcome none = distribute_auto(task_for(ms(u, {"{a}", "{b}"}), Fragment::OneCnf,
                                                      Distance::Hamming, Aggregation::Sum,
                                                      DistributionMode::Distribute, 3));
  CHECK(!none.witness);
}
