#include <benchmark/benchmark.h>

#include <random>

#include "fragmerge/fragments.hpp"
#include "fragmerge/merge.hpp"

using namespace fragmerge;

namespace {

AtomUniverse universe(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return AtomUniverse(std::move(names));
}

Profile random_profile(const AtomUniverse& u, int bases, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<KnowledgeBase> out;
  for (int b = 0; b < bases; ++b) {
    std::vector<Interpretation> members;
    const int k = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < k; ++i) members.push_back({static_cast<std::uint32_t>(rng()) & u.full_mask()});
    out.push_back(synthesize_kb(closure(ModelSet(u, std::move(members)), Fragment::Horn),
                                Fragment::Horn));
  }
  return Profile{std::move(out)};
}

void BM_merge(benchmark::State& state, Aggregation agg) {
  const AtomUniverse u = universe(static_cast<int>(state.range(0)));
  const Profile e = random_profile(u, static_cast<int>(state.range(1)), 7);
  const KnowledgeBase top(u, Fragment::Full, {});
  for (auto _ : state) {
    MergeResult r = merge(e, top, {Distance::Hamming, agg});
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(top.models().size()) * state.range(1));
}

} // namespace

BENCHMARK_CAPTURE(BM_merge, sum, Aggregation::Sum)->Args({8, 2})->Args({10, 4})->Args({12, 4});
BENCHMARK_CAPTURE(BM_merge, gmax, Aggregation::GMax)->Args({8, 2})->Args({10, 4})->Args({12, 4});
BENCHMARK_CAPTURE(BM_merge, gmin, Aggregation::GMin)->Args({10, 4});

BENCHMARK_MAIN();
