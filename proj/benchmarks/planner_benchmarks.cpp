#include <benchmark/benchmark.h>

#include "aoi_patrol/construction.hpp"
#include "aoi_patrol/exact.hpp"
#include "aoi_patrol/local_search.hpp"
#include "aoi_patrol/metrics.hpp"
#include "aoi_patrol/scenarios.hpp"
#include "aoi_patrol/simulate.hpp"

using namespace aoi_patrol;

namespace {

Instance scenario(int n) {
    return gen_scenario({n, n <= 8 ? 1000.0 : 8000.0, Distribution::grid, 7, 20.0}).instance;
}

void BM_greedy(benchmark::State& state) {
    const Instance inst = scenario(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(nearest_neighbor(inst));
}

void BM_srtt(benchmark::State& state) {
    const Instance inst = scenario(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(srtt(inst));
}

void BM_enforced(benchmark::State& state) {
    const Instance inst = scenario(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enforced(inst));
}

void BM_hybrid(benchmark::State& state) {
    const Instance inst = scenario(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hybrid(inst));
}

void BM_ls(benchmark::State& state) {
    const Instance inst = scenario(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ls_route(inst));
}

void BM_dp(benchmark::State& state) {
    const Instance inst = scenario(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dp_optimal(inst));
}

void BM_simulate_worst_case(benchmark::State& state) {
    const Instance inst = scenario(static_cast<int>(state.range(0)));
    const Route route = enforced(inst);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(inst, route, GenerationProcess::worst_case(0.0), 10));
    }
}

}  // namespace

BENCHMARK(BM_greedy)->Arg(8)->Arg(20);
BENCHMARK(BM_srtt)->Arg(8)->Arg(20);
BENCHMARK(BM_enforced)->Arg(8)->Arg(20);
BENCHMARK(BM_hybrid)->Arg(8)->Arg(20);
BENCHMARK(BM_ls)->Arg(8)->Arg(20);
BENCHMARK(BM_dp)->Arg(8)->Arg(16);
BENCHMARK(BM_simulate_worst_case)->Arg(8)->Arg(20);

BENCHMARK_MAIN();
