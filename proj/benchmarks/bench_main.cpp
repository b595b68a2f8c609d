#include <benchmark/benchmark.h>

#include <diffcyc/diffcyc.hpp>

using namespace diffcyc;

static void BM_Classify(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(classify(n).complexes.size());
}
BENCHMARK(BM_Classify)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_ClassifyParallel(benchmark::State& state) {
    ClassifyOptions options;
    options.jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(classify(13, options).complexes.size());
}
BENCHMARK(BM_ClassifyParallel)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_LensHomology(benchmark::State& state) {
    const FacetComplex c = expand(lens_series(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(homology(c).betti.size());
}
BENCHMARK(BM_LensHomology)->DenseRange(0, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_ManifoldCheck(benchmark::State& state) {
    const CyclicComplex c = lens_series(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_combinatorial_manifold(c));
}
BENCHMARK(BM_ManifoldCheck)->DenseRange(0, 10, 5);

static void BM_VerifyLensMember(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_lens_member(static_cast<int>(state.range(0))).ok());
}
BENCHMARK(BM_VerifyLensMember)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_DenseExtendable(benchmark::State& state) {
    const auto complexes = classify(12).complexes;
    for (auto _ : state)
        for (const CyclicComplex& c : complexes) benchmark::DoNotOptimize(dense_extendable(c).passes);
}
BENCHMARK(BM_DenseExtendable)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
