#include <benchmark/benchmark.h>

#include "erw/oracle.hpp"
#include "erw/sequences.hpp"

using namespace erw;

static void BM_scan_moments(benchmark::State& state) {
    WalkParams params(0.75, 0.0, BiasSchedule::power_law(0.8));
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto rows = scan_moments(params, {n});
        benchmark::DoNotOptimize(rows[0].second);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_scan_moments)->Arg(1 << 20)->Arg(1 << 23);

static void BM_build_tables(benchmark::State& state) {
    WalkParams params(0.6, 0.2, BiasSchedule::constant(0.3));
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto tables = SequenceTables::build(params, n);
        benchmark::DoNotOptimize(tables.var_m_prefix[n]);
    }
}
BENCHMARK(BM_build_tables)->Arg(1 << 16)->Arg(1 << 20);

static void BM_oracle_dp(benchmark::State& state) {
    WalkParams params(0.5, -0.5, BiasSchedule::power_law(0.5));
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto d = enumerate_distribution(params, n, OracleMode::MarkovDP);
        benchmark::DoNotOptimize(d.mean());
    }
}
BENCHMARK(BM_oracle_dp)->Arg(64)->Arg(512)->Arg(4096);
