#include <benchmark/benchmark.h>

#include "dormant/edgecount.hpp"
#include "dormant/ehrhart.hpp"
#include "dormant/fusion.hpp"
#include "dormant/hypergeom.hpp"
#include "dormant/triples.hpp"

namespace {

using namespace dormant;

void BM_EnumerateBalanced(benchmark::State& state) {
  const PrimeLevel pp(state.range(0), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_dagger_C(pp));
  }
}
BENCHMARK(BM_EnumerateBalanced)->Args({3, 2})->Args({5, 2})->Args({7, 2});

void BM_BuildFusionRing(benchmark::State& state) {
  const PrimeLevel pp(state.range(0), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_fusion_ring(pp));
  }
}
BENCHMARK(BM_BuildFusionRing)->Args({5, 2})->Args({7, 2})->Args({11, 1});

void BM_Characters(benchmark::State& state) {
  const PrimeLevel pp(state.range(0), static_cast<int>(state.range(1)));
  const FusionRing ring = build_fusion_ring(pp);
  for (auto _ : state) {
    benchmark::DoNotOptimize(characters(ring));
  }
}
BENCHMARK(BM_Characters)->Args({5, 2})->Args({7, 2});

void BM_CountNumberings(benchmark::State& state) {
  const PrimeLevel pp(7, 2);
  const ClutchingData graph =
      standard_graph(static_cast<int>(state.range(0)), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_numberings(graph, pp));
  }
}
BENCHMARK(BM_CountNumberings)->Arg(2)->Arg(4)->Arg(6);

void BM_HypergeomCube(benchmark::State& state) {
  const PrimeLevel pp(state.range(0), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    long long full = 0;
    for (long long a = 1; a <= pp.q; ++a) {
      for (long long b = 1; b <= pp.q; ++b) {
        for (long long c = 1; c <= pp.q; ++c) {
          full += has_full_root_functions(HGOperator(a, b, c, pp)) ? 1 : 0;
        }
      }
    }
    benchmark::DoNotOptimize(full);
  }
}
BENCHMARK(BM_HypergeomCube)->Args({5, 1})->Args({3, 2});

void BM_LatticeBalanced(benchmark::State& state) {
  const PrimeLevel pp(state.range(0), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dagger_C_via_lattice(pp));
  }
}
BENCHMARK(BM_LatticeBalanced)->Args({5, 2})->Args({7, 2});

}  // namespace

BENCHMARK_MAIN();
