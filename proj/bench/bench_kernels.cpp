// Serial vs OpenMP kernels. Run with OMP_NUM_THREADS set to compare scaling.

#include <benchmark/benchmark.h>

#include <random>

#include "mostn/kernels.hpp"
#include "mostn/problems.hpp"

namespace {

std::vector<mostn::ObjectiveVector> cloud(std::size_t n, std::size_t m, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<mostn::ObjectiveVector> pts(n, mostn::ObjectiveVector(m));
    for (auto& p : pts)
        for (auto& v : p) v = u(gen);
    return pts;
}

void BM_DominanceSerial(benchmark::State& state) {
    const auto pts = cloud(static_cast<std::size_t>(state.range(0)), 3, 1);
    for (auto _ : state) benchmark::DoNotOptimize(mostn::kernels::dominance_table_serial(pts));
}

void BM_DominanceParallel(benchmark::State& state) {
    const auto pts = cloud(static_cast<std::size_t>(state.range(0)), 3, 1);
    for (auto _ : state) benchmark::DoNotOptimize(mostn::kernels::dominance_table(pts));
}

void BM_NearestSerial(benchmark::State& state) {
    const auto front = mostn::sample_pareto_front(mostn::make_problem(mostn::ProblemId::UF8), 1000);
    const auto approx = cloud(static_cast<std::size_t>(state.range(0)), 3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(mostn::kernels::nearest_distances_serial(front, approx));
}

void BM_NearestParallel(benchmark::State& state) {
    const auto front = mostn::sample_pareto_front(mostn::make_problem(mostn::ProblemId::UF8), 1000);
    const auto approx = cloud(static_cast<std::size_t>(state.range(0)), 3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(mostn::kernels::nearest_distances(front, approx));
}

}  // namespace

BENCHMARK(BM_DominanceSerial)->Arg(500)->Arg(2000);
BENCHMARK(BM_DominanceParallel)->Arg(500)->Arg(2000);
BENCHMARK(BM_NearestSerial)->Arg(250)->Arg(1000);
BENCHMARK(BM_NearestParallel)->Arg(250)->Arg(1000);

BENCHMARK_MAIN();
