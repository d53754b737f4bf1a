#include <cspace/flag.hpp>
#include <cspace/ricci.hpp>
#include <cspace/solver.hpp>

#include <benchmark/benchmark.h>

using namespace cspace;

static void BM_Ricci(benchmark::State& st)
{
    const auto p = make_params(3, 4, 5);
    const InvariantMetric g{0.7, 1.3, 1.0, 1.1, 0.6, 0.2};
    for (auto _ : st)
        benchmark::DoNotOptimize(ricci_components(p, g));
}
BENCHMARK(BM_Ricci);

static void BM_Solve(benchmark::State& st)
{
    const auto p = make_params(st.range(0), st.range(1), st.range(2));
    for (auto _ : st)
        benchmark::DoNotOptimize(solve(p));
}
BENCHMARK(BM_Solve)->Args({1, 2, 3})->Args({3, 4, 5})->Args({2, 2, 3})->Unit(benchmark::kMillisecond);

static void BM_SolveExtended(benchmark::State& st)
{
    const auto p = make_params(100000, 99999, 99998);
    SolveOptions o;
    o.precision = Precision::Extended;
    for (auto _ : st)
        benchmark::DoNotOptimize(solve(p, o));
}
BENCHMARK(BM_SolveExtended)->Unit(benchmark::kMillisecond);

static void BM_Degree(benchmark::State& st)
{
    const auto p = make_params(3, 4, 5);
    for (auto _ : st)
        benchmark::DoNotOptimize(mapping_degree(p, 1.0));
}
BENCHMARK(BM_Degree)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
