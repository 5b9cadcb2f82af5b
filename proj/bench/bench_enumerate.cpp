#include "tverwind/drawings.hpp"
#include "tverwind/tverberg.hpp"
#include "tverwind/winding.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace tverwind;

namespace {

const Drawing& k7() {
    static const Drawing dr = random_drawing(Graph::complete(7), 1, 10);
    return dr;
}

const Drawing& k13() {
    static const Drawing dr = random_drawing(Graph::complete(13), 1, 50);
    return dr;
}

void BM_WindingReference_K7(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_winding_reference(k7(), 3));
}

void BM_WindingKernel_K7(benchmark::State& state) {
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_winding(k7(), 3, jobs));
}

void BM_WindingKernel_K13(benchmark::State& state) {
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_winding(k13(), 5, jobs));
}

void BM_Tverberg_Q3(benchmark::State& state) {
    Rng rng(3);
    PointConfig c{2, 3, {}};
    for (int i = 0; i < 7; ++i)
        c.points.push_back({Rational(static_cast<long>(rng.uniform(-99, 99))), Rational(static_cast<long>(rng.uniform(-99, 99)))});
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_tverberg(c, jobs));
}

void jobs_args(benchmark::internal::Benchmark* b) {
    b->Arg(1);
    if (omp_get_max_threads() > 1) b->Arg(omp_get_max_threads());
}

}  // namespace

BENCHMARK(BM_WindingReference_K7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WindingKernel_K7)->Apply(jobs_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WindingKernel_K13)->Apply(jobs_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Tverberg_Q3)->Apply(jobs_args)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
