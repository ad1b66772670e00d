#include <benchmark/benchmark.h>

#include "kappalat/algebra.hpp"
#include "kappalat/irreducibles.hpp"
#include "kappalat/modularity.hpp"
#include "kappalat/quiver.hpp"

using namespace kappalat;

static void BM_BuildBoolean(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FiniteLattice L = boolean_lattice(k);
    benchmark::DoNotOptimize(L.top());
  }
}
BENCHMARK(BM_BuildBoolean)->Arg(6)->Arg(8)->Arg(10);

static void BM_BuildWeakOrder(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FiniteLattice L = weak_order(n);
    benchmark::DoNotOptimize(L.top());
  }
}
BENCHMARK(BM_BuildWeakOrder)->Arg(4)->Arg(5);

static void BM_Semidistributive(benchmark::State& state) {
  FiniteLattice L = weak_order(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = is_semidistributive(L);
    benchmark::DoNotOptimize(r.ok);
  }
}
BENCHMARK(BM_Semidistributive)->Arg(4)->Arg(5);

static void BM_KappaTable(benchmark::State& state) {
  FiniteLattice L = weak_order(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    KappaData kd = compute_kappa(L);
    benchmark::DoNotOptimize(kd.bijective);
  }
}
BENCHMARK(BM_KappaTable)->Arg(4)->Arg(5);

static void BM_LeftModularSet(benchmark::State& state) {
  FiniteLattice L = weak_order(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    LmReport r = left_modular_set(L);
    benchmark::DoNotOptimize(r.is_lm_lattice);
  }
}
BENCHMARK(BM_LeftModularSet)->Arg(4)->Arg(5);

static void BM_TorsionClasses(benchmark::State& state) {
  AlgebraModel alg = nakayama_algebra(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    TorsLattice t = torsion_classes(alg);
    benchmark::DoNotOptimize(t.lattice.size());
  }
}
BENCHMARK(BM_TorsionClasses)->Arg(4)->Arg(5);

static void BM_SuccClosedSets(benchmark::State& state) {
  FiniteLattice L = boolean_lattice(static_cast<int>(state.range(0)));
  LabellingQuiver q = build_labelling_quiver(L);
  Budget b;
  b.max_sets = 1ull << 20;
  for (auto _ : state) {
    auto n = count_successor_closed_sets(q, b);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_SuccClosedSets)->Arg(8)->Arg(12);

static void BM_MaximalChains(benchmark::State& state) {
  FiniteLattice L = boolean_lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::uint64_t n = for_each_maximal_chain(
        L, 1ull << 24, [](const Chain&) { return true; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_MaximalChains)->Arg(5)->Arg(7);

BENCHMARK_MAIN();
