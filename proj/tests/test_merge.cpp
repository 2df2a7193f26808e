#include <doctest.h>

#include <array>
#include <climits>
#include <random>

#include "fragmerge/error.hpp"
#include "fragmerge/merge.hpp"
#include "fragmerge/text_io.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace fragmerge;
using namespace fragmerge::test;

namespace {

const Aggregation kAggs[] = {Aggregation::Sum, Aggregation::GMax, Aggregation::GMin};

} // namespace

TEST_CASE("merging the disjunction example") {
  const AtomUniverse u = uni("a,b");
  const Profile e{std::vector<KnowledgeBase>{parse_kb("horn\na\nb\n", u),
                                             parse_kb("horn\n-a -b\n", u)}};
  const KnowledgeBase top = parse_kb("horn\n", u);
  const ModelSet expected = ms(u, {"{a}", "{b}", "{a,b}"});
  for (Aggregation agg : kAggs)
    CHECK(merge(e, top, {Distance::Hamming, agg}).models == expected);

  SUBCASE("the distance matrix matches") {
    const MergeResult r = merge(e, top, {Distance::Hamming, Aggregation::Sum}, true);
    REQUIRE(r.matrix);
    REQUIRE(r.matrix->size() == 4);
    // rows in ascending bitmask order: {}, {a}, {b}, {a,b}
    CHECK((*r.matrix)[0].distances.entries == std::vector<int>{2, 0});
    CHECK((*r.matrix)[1].distances.entries == std::vector<int>{1, 0});
    CHECK((*r.matrix)[2].distances.entries == std::vector<int>{1, 0});
    CHECK((*r.matrix)[3].distances.entries == std::vector<int>{0, 1});
    CHECK((*r.matrix)[0].aggregate_key == std::vector<int>{2});
    CHECK(!(*r.matrix)[0].minimal);
    CHECK((*r.matrix)[3].minimal);
  }
}

TEST_CASE("the singleton-fragment example table") {
  // both sub-profiles of the four singleton 1CNF bases over {a,b}
  const AtomUniverse u = uni("a,b");
  const KnowledgeBase k_empty = parse_kb("1cnf\n-a\n-b\n", u);
  const KnowledgeBase k_a = parse_kb("1cnf\na\n-b\n", u);
  const KnowledgeBase k_b = parse_kb("1cnf\n-a\nb\n", u);
  const KnowledgeBase k_ab = parse_kb("1cnf\na\nb\n", u);
  const KnowledgeBase mu = parse_kb("1cnf\n", u);

  const Profile all{std::vector<KnowledgeBase>{k_empty, k_a, k_b, k_ab}};
  const int expected[4][4] = {{0, 1, 1, 2}, {1, 0, 2, 1}, {1, 2, 0, 1}, {2, 1, 1, 0}};
  int row = 0;
  for (const char* m : {"{}", "{a}", "{b}", "{a,b}"}) {
    const DistanceVector v = vector_of(w(u, m), all, Distance::Hamming);
    CHECK(v.entries == std::vector<int>(expected[row], expected[row] + 4));
    ++row;
  }

  const Profile e{std::vector<KnowledgeBase>{k_a, k_b}};
  const Profile e_prime{std::vector<KnowledgeBase>{k_empty, k_ab}};
  const ModelSet expected_models = ms(u, {"{a}", "{b}"});
  CHECK(merge(e, mu, {Distance::Hamming, Aggregation::GMin}).models == expected_models);
  CHECK(merge(e_prime, mu, {Distance::Hamming, Aggregation::GMax}).models == expected_models);

  // the ranked vectors behind those merges
  CHECK(aggregate_key(vector_of(w(u, "{a}"), e, Distance::Hamming), Aggregation::GMin) ==
        std::vector<int>{0, 2});
  CHECK(aggregate_key(vector_of(w(u, "{}"), e, Distance::Hamming), Aggregation::GMin) ==
        std::vector<int>{1, 1});
  CHECK(aggregate_key(vector_of(w(u, "{}"), e_prime, Distance::Hamming), Aggregation::GMax) ==
        std::vector<int>{2, 0});
  CHECK(aggregate_key(vector_of(w(u, "{a}"), e_prime, Distance::Hamming), Aggregation::GMax) ==
        std::vector<int>{1, 1});
}

TEST_CASE("revision is singleton merging") {
  const AtomUniverse u = uni("a,b,c");

  SUBCASE("two-model base straddling an incomparable pair") {
    const KnowledgeBase base = kb_with_models(ms(u, {"{a,b}", "{a,b,c}"}));
    const KnowledgeBase mu = kb_with_models(ms(u, {"{a}", "{b,c}", "{}"}));
    CHECK(revise(base, mu, Distance::Hamming).models == ms(u, {"{a}", "{b,c}"}));
  }

  SUBCASE("inconsistent constraint yields the empty result") {
    const KnowledgeBase base = parse_kb("horn\na\n", u);
    const KnowledgeBase mu = parse_kb("1cnf\nb\n-b\n", u);
    CHECK(revise(base, mu, Distance::Hamming).models.empty());
    CHECK(!revise(base, mu, Distance::Hamming).models.size());
  }

  SUBCASE("the krom example's min column") {
    const AtomUniverse base_u = uni("a,b,c,d,e");
    const AtomUniverse work = base_u.extended_with_fresh(3);
    const ModelSet primed(work, {{0b00011u | (0b110u << 5)},
                                 {0b10110u | (0b101u << 5)},
                                 {0b01101u | (0b011u << 5)}});
    const KnowledgeBase kprime = synthesize_kb(closure(primed, Fragment::Krom), Fragment::Krom);
    const ModelSet target = ms(base_u, {"{a,b}", "{b,c,e}", "{a,c,d}"});
    const KnowledgeBase mu =
        synthesize_kb(closure(extend_to(target, work), Fragment::Krom), Fragment::Krom);

    const MergeResult r = revise(kprime, mu, Distance::Hamming, true);
    REQUIRE(r.matrix);
    std::vector<int> min_column;
    for (const MatrixRow& row : *r.matrix) min_column.push_back(row.distances.entries[0]);
    // ascending row order: {a,b}, {a,b,c}, {a,c,d}, {b,c,e}
    CHECK(min_column == std::vector<int>{2, 3, 2, 2});
    CHECK(r.models == extend_to(target, work));
  }
}

TEST_CASE("merge equivalence check") {
  const AtomUniverse u = uni("a,b");
  const Profile e{std::vector<KnowledgeBase>{parse_kb("horn\na\nb\n", u),
                                             parse_kb("horn\n-a -b\n", u)}};
  const MergeResult r = merge(e, parse_kb("horn\n", u), {Distance::Hamming, Aggregation::Sum});
  CHECK(equiv(r, parse_kb("full\na b\n", u)));
  CHECK(!equiv(r, parse_kb("horn\na\n", u)));
  CHECK_THROWS_AS(equiv(r, parse_kb("full\na b\n", uni("b,a"))), Error);
}

TEST_CASE("merge results stay inside the constraint and match the naive oracle") {
  std::mt19937 rng(fragmerge_test_seed());
  for (int round = 0; round < 150; ++round) {
    const int n = 2 + static_cast<int>(rng() % 3);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
    const AtomUniverse u{names};
    const std::uint32_t full = u.full_mask();

    auto random_models = [&](bool allow_empty) {
      std::vector<std::uint32_t> models;
      const int k = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < k; ++i) models.push_back(rng() & full);
      std::sort(models.begin(), models.end());
      models.erase(std::unique(models.begin(), models.end()), models.end());
      if (allow_empty && rng() % 8 == 0) models.clear();
      return models;
    };

    const std::size_t len = 1 + rng() % 3;
    oracle::SemanticProfile sem;
    std::vector<KnowledgeBase> bases;
    for (std::size_t i = 0; i < len; ++i) {
      sem.bases.push_back(random_models(false));
      std::vector<Interpretation> members;
      for (std::uint32_t m : sem.bases.back()) members.push_back({m});
      bases.push_back(kb_with_models(ModelSet(u, members)));
    }
    const Profile profile{std::move(bases)};

    const std::vector<std::uint32_t> mu_models = random_models(true);
    std::vector<Interpretation> mu_members;
    for (std::uint32_t m : mu_models) mu_members.push_back({m});
    const KnowledgeBase mu = kb_with_models(ModelSet(u, mu_members));

    const Distance d = rng() % 2 ? Distance::Hamming : Distance::Drastic;
    for (Aggregation agg : kAggs) {
      const MergeResult r = merge(profile, mu, {d, agg});
      for (Interpretation m : r.models.members()) CHECK(mu.models().contains(m));
      const std::vector<std::uint32_t> expected = oracle::naive_merge(sem, mu_models, d, agg);
      std::vector<std::uint32_t> got;
      for (Interpretation m : r.models.members()) got.push_back(m.bits);
      CHECK(got == expected);
    }
  }
}

TEST_CASE("singleton profiles merge identically under every aggregation") {
  std::mt19937 rng(fragmerge_test_seed() + 1);
  const AtomUniverse u = uni("a,b,c");
  for (int round = 0; round < 50; ++round) {
    const std::uint32_t base_mask = 1 + rng() % 255;
    const std::uint32_t mu_mask = 1 + rng() % 255;
    const Profile e{std::vector<KnowledgeBase>{kb_with_models(ms_from_mask(u, base_mask))}};
    const KnowledgeBase mu = kb_with_models(ms_from_mask(u, mu_mask));
    const ModelSet sum = merge(e, mu, {Distance::Hamming, Aggregation::Sum}).models;
    CHECK(merge(e, mu, {Distance::Hamming, Aggregation::GMax}).models == sum);
    CHECK(merge(e, mu, {Distance::Hamming, Aggregation::GMin}).models == sum);
  }
}

TEST_CASE("merging returns the constraint when it entails every base") {
  const AtomUniverse u = uni("a,b,c");
  const KnowledgeBase k1 = parse_kb("horn\na\n", u);
  const KnowledgeBase k2 = parse_kb("horn\n-b a\n", u);
  const KnowledgeBase mu = parse_kb("horn\na\nb\n", u);  // models subset of both
  const Profile e{std::vector<KnowledgeBase>{k1, k2}};
  for (Aggregation agg : kAggs) {
    for (Distance d : {Distance::Drastic, Distance::Hamming})
      CHECK(merge(e, mu, {d, agg}).models == mu.models());
  }
}

TEST_CASE("normalizing the constraint to the closure preserves the merge") {
  // If merging some profile under a fragment-closed constraint returns K,
  // then the closure of K, used as the constraint, returns K again.
  // Exhaustive over |U| <= 3, profiles of length <= 2 and every closed
  // constraint, on the dense representation.
  const Fragment fragments[] = {Fragment::Full, Fragment::Horn, Fragment::Krom,
                                Fragment::OneCnf};
  for (int n = 1; n <= 3; ++n) {
    const std::uint32_t interp_count = 1u << n;
    for (Fragment f : fragments) {
      const dense::ClauseTable table = dense::make_clause_table(n, f);
      std::vector<dense::SetMask> closed;
      for (dense::SetMask s : dense::enumerate_closed_sets(table, 1u << 22))
        if (s != 0) closed.push_back(s);

      // per closed set, the Hamming distance from every interpretation
      std::vector<std::array<int, 8>> dist_to(closed.size());
      for (std::size_t c = 0; c < closed.size(); ++c)
        for (std::uint32_t m = 0; m < interp_count; ++m) {
          int best = n + 1;
          for (std::uint32_t x = 0; x < interp_count; ++x)
            if ((closed[c] >> x) & 1u) best = std::min(best, std::popcount(m ^ x));
          dist_to[c][m] = best;
        }

      // ranking key for a length-2 vector (x, y): sum, leximax or leximin
      auto key = [](int x, int y, Aggregation agg) -> std::pair<int, int> {
        switch (agg) {
          case Aggregation::Sum: return {x + y, 0};
          case Aggregation::GMax: return {std::max(x, y), std::min(x, y)};
          case Aggregation::GMin: return {std::min(x, y), std::max(x, y)};
        }
        return {0, 0};
      };
      auto dense_merge = [&](std::size_t i, std::size_t j, dense::SetMask mu,
                             Aggregation agg) {
        dense::SetMask out = 0;
        std::pair<int, int> best{INT_MAX, INT_MAX};
        for (std::uint32_t m = 0; m < interp_count; ++m) {
          if (((mu >> m) & 1u) == 0) continue;
          const std::pair<int, int> r = key(dist_to[i][m], dist_to[j][m], agg);
          if (r < best) {
            best = r;
            out = dense::SetMask{1} << m;
          } else if (r == best) {
            out |= dense::SetMask{1} << m;
          }
        }
        return out;
      };

      std::uint64_t violations = 0;
      for (std::size_t i = 0; i < closed.size(); ++i)
        for (std::size_t j = i; j < closed.size(); ++j)
          for (dense::SetMask mu : closed)
            for (Aggregation agg : kAggs) {
              const dense::SetMask merged = dense_merge(i, j, mu, agg);
              if (merged == 0) continue;
              if (dense_merge(i, j, table.close(merged), agg) != merged) ++violations;
            }
      CHECK(violations == 0);
    }
  }
}
