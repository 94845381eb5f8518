// Serial reference kernels against their OpenMP counterparts on the gallery workloads.

#include <benchmark/benchmark.h>

#include "dessinkit/dessin.hpp"
#include "dessinkit/gallery.hpp"
#include "dessinkit/kummer.hpp"
#include "dessinkit/perm_group.hpp"

using namespace dessinkit;

namespace {

ExecPolicy policy_of(const benchmark::State& state) {
  return state.range(0) == 0 ? ExecPolicy::Serial : ExecPolicy::Parallel;
}

void BM_GroupOrder(benchmark::State& state) {
  const Dessin d = gallery::dessin(1);
  for (auto _ : state) {
    const PermGroup g({d.sigma0(), d.sigma1()}, {}, policy_of(state));
    benchmark::DoNotOptimize(g.order());
  }
}

void BM_DiagonalGroup(benchmark::State& state) {
  const Dessin a = gallery::dessin(1);
  const Dessin b = gallery::dessin(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compare_regular_closures(a, b, {}, policy_of(state)).diagonal_order);
  }
}

void BM_Isomorphism(benchmark::State& state) {
  const Dessin a = gallery::dessin(1);
  const Dessin b = gallery::dessin(2);
  for (auto _ : state) benchmark::DoNotOptimize(dessins_isomorphic(a, b, policy_of(state)));
}

void BM_TowerConjugates(benchmark::State& state) {
  const TowerField f(static_cast<unsigned>(state.range(1)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_triples_distinct(f, 1, policy_of(state)).collisions);
}

}  // namespace

BENCHMARK(BM_GroupOrder)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiagonalGroup)->Args({0, 4})->Args({1, 4})->ArgNames({"parallel", "k"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Isomorphism)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TowerConjugates)->Args({0, 3})->Args({1, 3})->Args({0, 5})->Args({1, 5})->ArgNames({"parallel", "p"})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
