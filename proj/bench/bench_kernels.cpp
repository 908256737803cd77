// Serial reference kernels against their OpenMP forms, on workloads taken
// from the worked circle. Run with --benchmark_filter to pick a kernel.

#include "cbsg/circle_sg.hpp"
#include "cbsg/kernels.hpp"
#include "cbsg/oracle.hpp"
#include "cbsg/polygon_sg.hpp"

#include <benchmark/benchmark.h>

#include <omp.h>

using namespace cbsg;

namespace {

const Circle& circle()
{
    static const Circle C(Rat(7, 3), Rat(4, 3), Rat(1, 3));
    return C;
}

const std::vector<IntVec2>& gens()
{
    static const std::vector<IntVec2> g = circle_min_gens(circle()).points;
    return g;
}

const oracle::DilationBody& body()
{
    static const oracle::DilationBody b = oracle::circle_body(circle());
    return b;
}

bool member(IntVec2 p) { return oracle::dilation_member(p.x, p.y, body()); }

// points of a column strip of the box, as a row scan of x
std::vector<IntVec2> column(std::int64_t x, std::int64_t height)
{
    std::vector<IntVec2> out;
    for (std::int64_t y = 0; y <= height; ++y)
        if (member({x, y}))
            out.push_back({x, y});
    return out;
}

void threads_counter(benchmark::State& state) { state.counters["threads"] = omp_get_max_threads(); }

void BM_ReachabilitySerial(benchmark::State& state)
{
    const IntVec2 box{state.range(0), state.range(0)};
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::reachability_serial(gens(), box));
}

void BM_ReachabilityParallel(benchmark::State& state)
{
    const IntVec2 box{state.range(0), state.range(0)};
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::reachability_parallel(gens(), box));
    threads_counter(state);
}

void BM_ScanBoxSerial(benchmark::State& state)
{
    const IntVec2 box{state.range(0), state.range(0)};
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::scan_box_serial(box, member));
}

void BM_ScanBoxParallel(benchmark::State& state)
{
    const IntVec2 box{state.range(0), state.range(0)};
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::scan_box_parallel(box, member));
    threads_counter(state);
}

void BM_ScanSimplexSerial(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::scan_simplex_serial(state.range(0), member));
}

void BM_ScanSimplexParallel(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::scan_simplex_parallel(state.range(0), member));
    threads_counter(state);
}

void BM_ScanRowsSerial(benchmark::State& state)
{
    const std::int64_t n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::scan_rows_serial(n, [n](std::int64_t x) { return column(x, n); }));
}

void BM_ScanRowsParallel(benchmark::State& state)
{
    const std::int64_t n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::scan_rows_parallel(n, [n](std::int64_t x) { return column(x, n); }));
    threads_counter(state);
}

void BM_CircleMinGens(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(circle_min_gens(circle()));
}

void BM_OracleMinGens(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::naive_min_gens(body(), state.range(0)));
}

}

BENCHMARK(BM_ReachabilitySerial)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReachabilityParallel)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanBoxSerial)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanBoxParallel)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanSimplexSerial)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanSimplexParallel)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanRowsSerial)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanRowsParallel)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CircleMinGens)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleMinGens)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
