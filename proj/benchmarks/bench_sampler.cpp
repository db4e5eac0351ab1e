#include <benchmark/benchmark.h>

#include "erw/ensemble.hpp"
#include "erw/sampler.hpp"

using namespace erw;

static void BM_walk_steps(benchmark::State& state) {
    const double alpha = static_cast<double>(state.range(0)) / 100.0;
    WalkParams params(alpha, 0.0, BiasSchedule::zero());
    const std::uint64_t n = 1 << 20;
    StepTables tables(params, n);
    std::vector<std::uint64_t> cps{n};
    std::uint64_t seed = 1;
    for (auto _ : state) {
        std::int64_t last = 0;
        run_walk(params, tables, cps.data(), cps.data() + 1, SplitMix64(seed++),
                 [&](std::uint64_t, std::int64_t s) { last = s; });
        benchmark::DoNotOptimize(last);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_walk_steps)->Arg(0)->Arg(50)->Arg(75);

static void BM_walk_steps_powerlaw(benchmark::State& state) {
    WalkParams params(0.75, 0.0, BiasSchedule::power_law(0.8));
    const std::uint64_t n = 1 << 20;
    StepTables tables(params, n);
    std::vector<std::uint64_t> cps{n};
    std::uint64_t seed = 1;
    for (auto _ : state) {
        std::int64_t last = 0;
        run_walk(params, tables, cps.data(), cps.data() + 1, SplitMix64(seed++),
                 [&](std::uint64_t, std::int64_t s) { last = s; });
        benchmark::DoNotOptimize(last);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_walk_steps_powerlaw);

static void BM_ensemble(benchmark::State& state) {
    WalkParams params(0.75, 0.0, BiasSchedule::zero());
    EnsembleConfig cfg;
    cfg.m = 512;
    cfg.master_seed = 7;
    cfg.workers = static_cast<unsigned>(state.range(0));
    std::vector<std::uint64_t> cps{1 << 14};
    for (auto _ : state) {
        auto stats = run_ensemble(params, cps, cfg);
        benchmark::DoNotOptimize(stats.moments[0].mean());
    }
    state.SetItemsProcessed(state.iterations() * 512 * (1 << 14));
}
BENCHMARK(BM_ensemble)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();
