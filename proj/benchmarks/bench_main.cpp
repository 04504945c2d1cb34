#include "emso/analytics.hpp"
#include "emso/detect.hpp"
#include "emso/logic.hpp"
#include "emso/process.hpp"
#include "emso/random.hpp"
#include "emso/search.hpp"
#include "emso/witness.hpp"

#include <benchmark/benchmark.h>

using namespace emso;

static void BM_SampleDense(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t t = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_gnp_dense({n, 0.3, 1, t++}));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * (n - 1) / 2));
}
BENCHMARK(BM_SampleDense)->Arg(100)->Arg(1000);

static void BM_SampleSkip(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const double p = edge_probability(static_cast<double>(n), 0.7);
    std::uint64_t t = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_gnp_skip({n, p, 1, t++}));
    }
}
BENCHMARK(BM_SampleSkip)->Arg(1000)->Arg(100000);

static void BM_BuildWStar(benchmark::State& state)
{
    const auto a = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_W_star({a, 2, 2}));
    }
}
BENCHMARK(BM_BuildWStar)->Arg(2)->Arg(3)->Arg(4);

static void BM_AutomorphismsW2(benchmark::State& state)
{
    auto w = build_W({2, static_cast<std::size_t>(state.range(0)), 4});
    for (auto _ : state) {
        benchmark::DoNotOptimize(automorphism_count(w.graph));
    }
}
BENCHMARK(BM_AutomorphismsW2)->Arg(0)->Arg(2);

static void BM_DetectDominating(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const double p = edge_probability(static_cast<double>(n), 0.4);
    std::uint64_t t = 0;
    for (auto _ : state) {
        state.PauseTiming();
        auto g = sample_gnp({n, p, 3, t++});
        state.ResumeTiming();
        benchmark::DoNotOptimize(find_dominating_induced_W(g, 0, 2, 1, 3));
    }
}
BENCHMARK(BM_DetectDominating)->Arg(30)->Arg(60);

static void BM_EvaluateEmso(benchmark::State& state)
{
    auto phi = parse_formula("EXSET X (@isoW(X; gamma=0) & @max(X))");
    auto g = sample_gnp({static_cast<std::size_t>(state.range(0)), 0.5, 9, 0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(g, phi));
    }
}
BENCHMARK(BM_EvaluateEmso)->Arg(8)->Arg(12);

static void BM_GammaRProperty(benchmark::State& state)
{
    auto w = build_W_star({2, 2, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(has_gamma_r_property(w.graph, 2, 2));
    }
}
BENCHMARK(BM_GammaRProperty);

static void BM_SequencePart1(benchmark::State& state)
{
    auto k = Part1Constants::defaults(0.3, 10);
    const auto i = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sequence_part1(i, 0.3, 10, k));
    }
}
BENCHMARK(BM_SequencePart1)->Arg(4)->Arg(8);

static void BM_SequencePart2(benchmark::State& state)
{
    Part2Params p{.alpha = 0.6, .beta = 0.25, .gamma = 4, .r = 3, .epsilon = 1.0};
    const auto i = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sequence_part2(i, p));
    }
}
BENCHMARK(BM_SequencePart2)->Arg(2)->Arg(4);
BENCHMARK_MAIN();
