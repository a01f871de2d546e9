// Serial reference implementations against the OpenMP / table-driven paths.
#include <benchmark/benchmark.h>

#include <vector>

#include "mstd/experiments.hpp"
#include "mstd/kernels.hpp"

using namespace mstd;

namespace {

void BM_CensusReference(benchmark::State& state) {
    auto g = make_dihedral(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::census(g));
}

void BM_CensusParallel(benchmark::State& state) {
    auto g = make_dihedral(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(census(g));
}

void BM_MonteCarloReference(benchmark::State& state) {
    auto g = make_cyclic(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::monte_carlo_group(g, 20000, 1));
}

void BM_MonteCarloParallel(benchmark::State& state) {
    auto g = make_cyclic(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_group(g, 20000, 1));
}

void BM_IntervalReference(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(reference::interval_monte_carlo(99, 20000, 1));
}

void BM_IntervalParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(interval_monte_carlo(99, 20000, 1));
}

// single-set kernels on a fixed pseudo-random mask of D_{2n}
void BM_PairKernel(benchmark::State& state) {
    auto g = make_dihedral(static_cast<std::uint32_t>(state.range(0)));
    std::vector<std::uint64_t> s(1, 0x9e3779b97f4a7c15ULL & (g.order() == 64 ? ~0ULL : (1ULL << g.order()) - 1));
    for (auto _ : state) benchmark::DoNotOptimize(kernel::reference_sizes(g, s));
}

void BM_TableKernel(benchmark::State& state) {
    auto g = make_dihedral(static_cast<std::uint32_t>(state.range(0)));
    kernel::SmallGroupKernel k(g);
    std::uint64_t s = 0x9e3779b97f4a7c15ULL & k.full_mask();
    for (auto _ : state) {
        benchmark::DoNotOptimize(s);
        benchmark::DoNotOptimize(k.sizes(s));
    }
}

}  // namespace

BENCHMARK(BM_CensusReference)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloReference)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloParallel)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntervalReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntervalParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairKernel)->Arg(8)->Arg(32);
BENCHMARK(BM_TableKernel)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
