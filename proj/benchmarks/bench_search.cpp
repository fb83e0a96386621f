#include "hodgespec/bounds.hpp"
#include "hodgespec/generators.hpp"
#include "hodgespec/invariants.hpp"

#include <benchmark/benchmark.h>

using namespace hodgespec;

static void BM_IndependenceNumber(benchmark::State& state) {
    const auto x = complete_complex(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(independence_number(x, 2));
    }
}
BENCHMARK(BM_IndependenceNumber)->Arg(8)->Arg(10)->Arg(12);

static void BM_ChromaticNumber(benchmark::State& state) {
    const auto x = random_pure(static_cast<int>(state.range(0)), 2, 0.45, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(chromatic_number(x, 2));
    }
}
BENCHMARK(BM_ChromaticNumber)->Arg(9)->Arg(10);

static void BM_LocalBound(benchmark::State& state) {
    const auto x = random_pure(10, 2, 0.5, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(local_bound(x, kSpectralTol, 1));
    }
}
BENCHMARK(BM_LocalBound);
