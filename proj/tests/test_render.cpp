#include <doctest.h>

#include <json.hpp>

#include "fragmerge/render.hpp"
#include "fragmerge/text_io.hpp"
#include "test_support.hpp"

using namespace fragmerge;
using namespace fragmerge::test;

namespace {

std::string golden(const std::string& name) {
  return read_file(std::string(FRAGMERGE_GOLDEN_DIR) + "/" + name);
}

std::string render_for(const Profile& e, const KnowledgeBase& mu, MergeSpec spec) {
  const MergeResult r = merge(e, mu, spec, true);
  return render_matrix_text(matrix_report(e, mu, spec, r));
}

} // namespace

TEST_CASE("the three example matrices render byte-identically") {
  SUBCASE("two-base horn profile under sum") {
    const AtomUniverse u = uni("a,b");
    const Profile e{std::vector<KnowledgeBase>{parse_kb("horn\na\nb\n", u),
                                               parse_kb("horn\n-a -b\n", u)}};
    CHECK(render_for(e, parse_kb("horn\n", u), {Distance::Hamming, Aggregation::Sum}) ==
          golden("example_sum.txt"));
  }
  SUBCASE("singleton-model profiles under gmin and gmax") {
    const AtomUniverse u = uni("a,b");
    const KnowledgeBase k_empty = parse_kb("1cnf\n-a\n-b\n", u);
    const KnowledgeBase k_a = parse_kb("1cnf\na\n-b\n", u);
    const KnowledgeBase k_b = parse_kb("1cnf\n-a\nb\n", u);
    const KnowledgeBase k_ab = parse_kb("1cnf\na\nb\n", u);
    const KnowledgeBase mu = parse_kb("1cnf\n", u);
    CHECK(render_for(Profile{{k_a, k_b}}, mu, {Distance::Hamming, Aggregation::GMin}) ==
          golden("pair_gmin.txt"));
    CHECK(render_for(Profile{{k_empty, k_ab}}, mu, {Distance::Hamming, Aggregation::GMax}) ==
          golden("pair_gmax.txt"));
  }
  SUBCASE("the krom base against its closure constraint") {
    const AtomUniverse base = uni("a,b,c,d,e");
    const AtomUniverse work = base.extended_with_fresh(3);
    const ModelSet primed(work, {{0b00011u | (0b110u << 5)},
                                 {0b10110u | (0b101u << 5)},
                                 {0b01101u | (0b011u << 5)}});
    const KnowledgeBase kprime = synthesize_kb(closure(primed, Fragment::Krom), Fragment::Krom);
    const ModelSet target = ms(base, {"{a,b}", "{b,c,e}", "{a,c,d}"});
    const KnowledgeBase mu =
        synthesize_kb(closure(extend_to(target, work), Fragment::Krom), Fragment::Krom);
    CHECK(render_for(Profile{std::vector<KnowledgeBase>{kprime}}, mu,
                     {Distance::Hamming, Aggregation::Sum}) == golden("krom_revision.txt"));
  }
}

TEST_CASE("text output is a pure function of the json report") {
  const AtomUniverse u = uni("a,b");
  const Profile e{std::vector<KnowledgeBase>{parse_kb("horn\na\nb\n", u),
                                             parse_kb("horn\n-a -b\n", u)}};
  const KnowledgeBase mu = parse_kb("horn\n", u);
  const MergeSpec spec{Distance::Hamming, Aggregation::GMax};
  const MergeResult r = merge(e, mu, spec, true);
  const nlohmann::json doc = matrix_report(e, mu, spec, r);

  const std::string direct = render_matrix_text(doc);
  const nlohmann::json reparsed = nlohmann::json::parse(doc.dump());
  CHECK(render_matrix_text(reparsed) == direct);
  CHECK(doc.at("result").size() == 3);
}
