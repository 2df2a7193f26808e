#include <benchmark/benchmark.h>

#include <random>

#include "fragmerge/fragments.hpp"

using namespace fragmerge;

namespace {

AtomUniverse universe(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return AtomUniverse(std::move(names));
}

ModelSet random_set(const AtomUniverse& u, int members, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Interpretation> out;
  for (int i = 0; i < members; ++i) out.push_back({static_cast<std::uint32_t>(rng()) & u.full_mask()});
  return ModelSet(u, std::move(out));
}

void BM_closure(benchmark::State& state, Fragment f) {
  const AtomUniverse u = universe(static_cast<int>(state.range(0)));
  const ModelSet set = random_set(u, static_cast<int>(state.range(1)), 42);
  for (auto _ : state) {
    ModelSet closed = closure(set, f);
    benchmark::DoNotOptimize(closed);
  }
}

void BM_synthesize(benchmark::State& state, Fragment f) {
  const AtomUniverse u = universe(static_cast<int>(state.range(0)));
  const ModelSet closed = closure(random_set(u, 6, 42), f);
  for (auto _ : state) {
    KnowledgeBase kb = synthesize_kb(closed, f);
    benchmark::DoNotOptimize(kb);
  }
}

} // namespace

BENCHMARK_CAPTURE(BM_closure, horn, Fragment::Horn)->Args({8, 16})->Args({12, 32})->Args({16, 64});
BENCHMARK_CAPTURE(BM_closure, krom, Fragment::Krom)->Args({8, 16})->Args({12, 32});
BENCHMARK_CAPTURE(BM_closure, onecnf, Fragment::OneCnf)->Args({8, 16})->Args({12, 16});
BENCHMARK_CAPTURE(BM_synthesize, horn, Fragment::Horn)->Arg(6)->Arg(9);
BENCHMARK_CAPTURE(BM_synthesize, krom, Fragment::Krom)->Arg(6)->Arg(9)->Arg(12);

BENCHMARK_MAIN();
