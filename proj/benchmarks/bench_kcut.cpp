#include <benchmark/benchmark.h>

#include <random>

#include "kcut/corpus.hpp"
#include "kcut/dynamics.hpp"

using namespace kcut;

namespace {

GameSpec dense_graph(int n, int k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return GameSpec(random_connected_graph(n, 0.5, rng), k);
}

}  // namespace

static void BM_OptimalColoring(benchmark::State& state) {
    const auto spec = dense_graph(static_cast<int>(state.range(0)), 3, 1);
    for (auto _ : state) benchmark::DoNotOptimize(optimal_coloring_exact(spec));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OptimalColoring)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

// Full SE check at a Nash equilibrium: most coalitions survive the cost
// filter, so this exercises the joint-move scan.
static void BM_StrongCheckAtNash(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto spec = dense_graph(n, 3, 2);
    const auto sigma = local_search_coloring(spec, 3);
    std::uint64_t examined = 0;
    for (auto _ : state) {
        auto r = is_strong(spec, sigma);
        examined = r.coalitions_examined;
        benchmark::DoNotOptimize(r);
    }
    state.counters["coalitions"] = static_cast<double>(examined);
}
BENCHMARK(BM_StrongCheckAtNash)->DenseRange(6, 14, 2)->Unit(benchmark::kMillisecond);

static void BM_FiveStrongCheckAtOptimum(benchmark::State& state) {
    const auto spec = dense_graph(static_cast<int>(state.range(0)), 3, 4);
    const auto sigma = optimal_coloring_exact(spec).coloring;
    for (auto _ : state) benchmark::DoNotOptimize(is_q_strong(spec, sigma, 5));
}
BENCHMARK(BM_FiveStrongCheckAtOptimum)->DenseRange(7, 11, 2);

static void BM_LocalStrongCheck(benchmark::State& state) {
    const auto spec = dense_graph(static_cast<int>(state.range(0)), 3, 5);
    const auto sigma = local_search_coloring(spec, 6);
    for (auto _ : state) benchmark::DoNotOptimize(is_local_strong(spec, sigma));
}
BENCHMARK(BM_LocalStrongCheck)->RangeMultiplier(2)->Range(8, 64);

static void BM_CliqueEnumeration(benchmark::State& state) {
    const auto spec = dense_graph(static_cast<int>(state.range(0)), 2, 7);
    for (auto _ : state) {
        std::uint64_t count = for_each_x_local_coalition(spec.graph(), 1, spec.n(), [](const Coalition&) {
            return true;
        });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_CliqueEnumeration)->RangeMultiplier(2)->Range(8, 64);

static void BM_StrongMinimalDynamics(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto spec = dense_graph(n, 3, 8);
    std::mt19937_64 rng(9);
    const auto start = random_coloring(n, 3, rng);
    for (auto _ : state) benchmark::DoNotOptimize(run(spec, start, Policy::strong_minimal(5), 10000));
}
BENCHMARK(BM_StrongMinimalDynamics)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

static void BM_UnilateralDynamics(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(10);
    const GameSpec spec(random_graph(n, 0.2, rng, default_weight_menu()), 4);
    const auto start = random_coloring(n, 4, rng);
    for (auto _ : state) benchmark::DoNotOptimize(run(spec, start, Policy::unilateral(), 1000000));
}
BENCHMARK(BM_UnilateralDynamics)->RangeMultiplier(4)->Range(16, 256);

BENCHMARK_MAIN();
