#include "hodgespec/chains.hpp"
#include "hodgespec/generators.hpp"
#include "hodgespec/spectra.hpp"

#include <benchmark/benchmark.h>

using namespace hodgespec;

static void BM_CoboundaryBuild(benchmark::State& state) {
    const auto x = complete_complex(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(coboundary_matrix(x, 2));
    }
}
BENCHMARK(BM_CoboundaryBuild)->Arg(8)->Arg(10);

static void BM_UpperLaplacianSpectrum(benchmark::State& state) {
    const auto x = complete_complex(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectrum(x, 2, OperatorKind::upper));
    }
}
BENCHMARK(BM_UpperLaplacianSpectrum)->Arg(8)->Arg(10);

static void BM_SpectrumPairing(benchmark::State& state) {
    const auto x = crosspolytope_boundary(3);
    for (auto _ : state) {
        auto up = spectrum(x, 1, OperatorKind::upper);
        auto low = spectrum(x, 2, OperatorKind::lower);
        benchmark::DoNotOptimize(up);
        benchmark::DoNotOptimize(low);
    }
}
BENCHMARK(BM_SpectrumPairing);

BENCHMARK_MAIN();
