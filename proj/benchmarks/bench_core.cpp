#include "cross/spectrum.hpp"
#include "cross/su2_rep.hpp"
#include "cross/yamabe.hpp"

#include <benchmark/benchmark.h>

using namespace cross;

static void NuSpectrumTridiagonal(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const TriAxis axes(3.0, 2.0, 1.0);
    NuOptions opts;
    opts.method = NuMethod::Tridiagonal;
    for (auto _ : state) {
        auto nu = nu_spectrum(k, axes, opts);
        benchmark::DoNotOptimize(nu.values.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(NuSpectrumTridiagonal)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void NuSpectrumClosed(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const TriAxis axes(3.0, 2.0, 2.0);
    for (auto _ : state) {
        auto nu = nu_spectrum(k, axes);
        benchmark::DoNotOptimize(nu.values.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(NuSpectrumClosed)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void TruncatedSpectrumQuat(benchmark::State& state) {
    const MetricSpec spec = MetricSpec::quat(1, 0.7, 1.1, 1.9, Quotient::Sphere);
    const double cutoff = static_cast<double>(state.range(0));
    for (auto _ : state) {
        auto slice = truncated_spectrum(spec, cutoff);
        benchmark::DoNotOptimize(slice.levels.data());
    }
}
BENCHMARK(TruncatedSpectrumQuat)->Arg(50)->Arg(200)->Arg(800);

static void BoundaryMeshN1(benchmark::State& state) {
    const int res = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto mesh = boundary_mesh(1, res);
        benchmark::DoNotOptimize(mesh.points.data());
    }
}
BENCHMARK(BoundaryMeshN1)->Arg(16)->Arg(64);

static void MorseIndexCollapsed(benchmark::State& state) {
    const MetricSpec spec = MetricSpec::cp_check(1, 0.1);
    for (auto _ : state) {
        auto m = morse_index(spec);
        benchmark::DoNotOptimize(m.index);
    }
}
BENCHMARK(MorseIndexCollapsed);

BENCHMARK_MAIN();
