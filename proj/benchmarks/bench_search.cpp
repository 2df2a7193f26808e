#include <benchmark/benchmark.h>

#include "fragmerge/distribute.hpp"
#include "fragmerge/text_io.hpp"

using namespace fragmerge;

namespace {

// Exhausting the 1CNF search space is the worst case: no witness exists, so
// every profile up to the length bound is visited.
void BM_search_exhaust(benchmark::State& state) {
  const AtomUniverse u = parse_universe("a,b,c");
  const ModelSet target = parse_model_set("{a}\n{b}\n{a,b,c}\n", u);
  const DistributionTask task{target,
                              Fragment::OneCnf,
                              {Distance::Hamming, Aggregation::Sum},
                              DistributionMode::Distribute,
                              {static_cast<int>(state.range(0)), 0, 1'000'000'000}};
  std::uint64_t profiles = 0;
  for (auto _ : state) {
    SearchOutcome out = search(task, static_cast<int>(state.range(1)));
    profiles = out.certificate.profiles_examined;
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(profiles) * state.iterations());
}

void BM_search_hit(benchmark::State& state) {
  const AtomUniverse u = parse_universe("a,b");
  const ModelSet target = parse_model_set("{a}\n{b}\n{a,b}\n", u);
  const DistributionTask task{target,
                              Fragment::Horn,
                              {Distance::Hamming, Aggregation::Sum},
                              DistributionMode::Distribute,
                              {2, 0, 1'000'000'000}};
  for (auto _ : state) {
    SearchOutcome out = search(task);
    benchmark::DoNotOptimize(out);
  }
}

} // namespace

BENCHMARK(BM_search_exhaust)->Args({2, 1})->Args({3, 1})->Args({4, 1})->Args({4, 4});
BENCHMARK(BM_search_hit);

BENCHMARK_MAIN();
