#include "sshl/ds6v.hpp"
#include "sshl/field.hpp"
#include "sshl/suite.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace sshl;

void BM_FieldSerial(benchmark::State& state)
{
    const int T = static_cast<int>(state.range(0));
    FieldSampler s(T, fixture_point(0));
    std::uint64_t n = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(s.sample(1, n++));
}
BENCHMARK(BM_FieldSerial)->Arg(4)->Arg(8);

void BM_FieldParallel(benchmark::State& state)
{
    const int T = static_cast<int>(state.range(0));
    FieldSampler s(T, fixture_point(0));
    std::uint64_t n = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(s.sample_parallel(1, n++));
}
BENCHMARK(BM_FieldParallel)->Arg(4)->Arg(8);

void BM_DS6VSerial(benchmark::State& state)
{
    const int T = static_cast<int>(state.range(0));
    const DS6VSampler s(T, fixture_point(0));
    std::uint64_t n = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(s.sample(1, n++));
}
BENCHMARK(BM_DS6VSerial)->Arg(4)->Arg(8);

void BM_DS6VBatch(benchmark::State& state)
{
    const Params p = fixture_point(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(ds6v_sample_batch(4, 1, 1000, p));
}
BENCHMARK(BM_DS6VBatch)->Unit(benchmark::kMillisecond);

void BM_ParticleTrajectory(benchmark::State& state)
{
    const Params p = fixture_point(0);
    std::uint64_t n = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(particle_trajectory(8, 1, n++, p));
}
BENCHMARK(BM_ParticleTrajectory);

} // namespace

BENCHMARK_MAIN();
