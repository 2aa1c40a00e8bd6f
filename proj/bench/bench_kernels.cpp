// Serial reference kernels against their OpenMP counterparts.

#include <array>
#include <cstdint>

#include <benchmark/benchmark.h>

#include "twist/ec_twist_lab.hpp"
#include "twist/kernels.hpp"

namespace {

using twist::kernels::SweepOptions;

void BM_SweepSerial(benchmark::State& state) {
    const SweepOptions options{static_cast<std::uint64_t>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(twist::kernels::sweep_serial(options));
}

void BM_SweepParallel(benchmark::State& state) {
    const SweepOptions options{static_cast<std::uint64_t>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(twist::kernels::sweep_parallel(options));
}

constexpr std::array<std::uint64_t, 3> kPrimes{5, 7, 11};
constexpr std::array<unsigned, 1> kDegrees{1};

void BM_SurveySerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(twist::ec::survey(kPrimes, kDegrees));
}

void BM_SurveyParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(twist::kernels::survey_parallel(kPrimes, kDegrees));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SurveySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SurveyParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
