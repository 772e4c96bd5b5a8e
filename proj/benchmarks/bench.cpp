// Microbenchmarks for the hot paths: gamma1 scoring, the corner census, the
// preprocessing pass and full repairs. Inputs are seeded, so numbers are
// comparable across runs and machines.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "robinson/approx.hpp"
#include "robinson/corner_counts.hpp"
#include "robinson/gamma.hpp"
#include "robinson/matrix.hpp"
#include "robinson/pipeline.hpp"
#include "robinson/preprocess.hpp"
#include "robinson/rng.hpp"
#include "robinson/seriate.hpp"

namespace {

using namespace robinson;

BinaryMask bench_mask(int n, std::uint64_t seed) {
    CounterRng rng(seed);
    BinaryMask m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) m.set(i, j, rng.next_double() < 0.5);
    return m;
}

SymmetricMatrix bench_matrix(int n, int levels, std::uint64_t seed) {
    CounterRng rng(seed);
    SymmetricMatrix a(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            a.set(i, j, static_cast<double>(rng.next_below(static_cast<std::uint64_t>(levels))) /
                            (levels - 1));
    return a;
}

void BM_gamma1_fast(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    SymmetricMatrix a = bench_matrix(n, 32, 1);
    for (auto _ : state) benchmark::DoNotOptimize(gamma1_fast(a));
    state.SetComplexityN(n);
}
BENCHMARK(BM_gamma1_fast)->Arg(250)->Arg(500)->Arg(1000)->Complexity(benchmark::oNSquared);

void BM_gamma1_direct(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    SymmetricMatrix a = bench_matrix(n, 32, 2);
    for (auto _ : state) benchmark::DoNotOptimize(gamma1_direct(a));
    state.SetComplexityN(n);
}
BENCHMARK(BM_gamma1_direct)->Arg(100)->Arg(200)->Arg(400)->Complexity(benchmark::oNCubed);

void BM_gamma1_fast_binary(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    BinaryMask m = bench_mask(n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(gamma1_fast(m));
    state.SetComplexityN(n);
}
BENCHMARK(BM_gamma1_fast_binary)->Arg(500)->Arg(1000)->Arg(2000)->Complexity(benchmark::oNSquared);

void BM_corner_counts(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    BinaryMask m = bench_mask(n, 4);
    for (auto _ : state) benchmark::DoNotOptimize(corner_counts(m));
    state.SetComplexityN(n);
}
BENCHMARK(BM_corner_counts)->Arg(500)->Arg(1000)->Arg(2000)->Complexity(benchmark::oNSquared);

void BM_preprocess(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    BinaryMask m = bench_mask(n, 5);
    for (int i = 1; i <= n; ++i) m.set(i, i, true);
    double n3 = static_cast<double>(n) * n * n;
    double t = threshold_theorem(static_cast<double>(detail::gamma1_count(m)) / n3, n);
    for (auto _ : state) benchmark::DoNotOptimize(preprocess(m, t));
    state.SetComplexityN(n);
}
BENCHMARK(BM_preprocess)->Arg(100)->Arg(200)->Arg(400)->Complexity(benchmark::oNSquared);

void BM_approximate_binary(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    BinaryMask m = bench_mask(n, 6);
    for (auto _ : state) benchmark::DoNotOptimize(approximate_binary(m));
}
BENCHMARK(BM_approximate_binary)->Arg(100)->Arg(200)->Arg(400);

void BM_approximate_general(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    SymmetricMatrix a = bench_matrix(n, 8, 7);
    for (auto _ : state) benchmark::DoNotOptimize(approximate_general(a));
}
BENCHMARK(BM_approximate_general)->Arg(50)->Arg(100)->Arg(200);

void BM_seriate_local(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    SymmetricMatrix a = bench_matrix(n, 8, 8);
    SeriationConfig cfg;
    cfg.restarts = 2;
    for (auto _ : state) benchmark::DoNotOptimize(seriate_local(a, cfg));
}
BENCHMARK(BM_seriate_local)->Arg(12)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
