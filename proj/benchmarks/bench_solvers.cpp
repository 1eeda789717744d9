#include <benchmark/benchmark.h>

#include "stokes2p/fft.hpp"
#include "stokes2p/field.hpp"
#include "stokes2p/rng.hpp"

using namespace stokes2p;

static void BM_TangentialFFT(benchmark::State& state) {
    PeriodicGrid g = default_grid(2);
    Rng rng(1);
    TwoPhaseField f = TwoPhaseField::zero(g, 2, TangSpace::physical);
    for (auto& v : f.plus_vals) v = rng.complex_gaussian();
    for (auto& v : f.minus_vals) v = rng.complex_gaussian();
    for (auto _ : state) {
        tangential_transform(f, TangSpace::spectral);
        tangential_transform(f, TangSpace::physical);
        benchmark::DoNotOptimize(f.plus_vals.data());
    }
}
BENCHMARK(BM_TangentialFFT);

BENCHMARK_MAIN();
