#include <benchmark/benchmark.h>

#include <vector>

#include "erw/moments.hpp"
#include "erw/rng.hpp"
#include "erw/stats.hpp"

using namespace erw;

static void BM_ks_distance(benchmark::State& state) {
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    SplitMix64 rng(3);
    std::vector<double> xs(m);
    for (auto& x : xs) x = normal_quantile(std::max(1e-15, rng.next_double()));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ks_distance_std_normal(xs));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m));
}
BENCHMARK(BM_ks_distance)->Arg(1 << 14)->Arg(1 << 17);

static void BM_running_moments_push(benchmark::State& state) {
    SplitMix64 rng(4);
    std::vector<double> xs(1 << 16);
    for (auto& x : xs) x = rng.next_double();
    for (auto _ : state) {
        RunningMoments m;
        for (double x : xs) m.push(x);
        benchmark::DoNotOptimize(m.kurtosis());
    }
    state.SetItemsProcessed(state.iterations() * (1 << 16));
}
BENCHMARK(BM_running_moments_push);

BENCHMARK_MAIN();
