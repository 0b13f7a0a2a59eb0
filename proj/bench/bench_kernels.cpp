// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to the
// core count; on one core the parallel path falls back to serial.

#include "pendrng/baselines.hpp"
#include "pendrng/harness.hpp"
#include "pendrng/kernels.hpp"
#include "pendrng/sts.hpp"

#include <benchmark/benchmark.h>

using namespace pendrng;
using kernels::Exec;

namespace {

const Bitstream& stream()
{
    static const Bitstream bits = [] {
        HashDrbg drbg(1);
        return fill_bitstream(drbg, 4'000'000);
    }();
    return bits;
}

Exec exec_of(const benchmark::State& state)
{
    return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

void label(benchmark::State& state)
{
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(stream().size()));
}

void BM_PatternCounts(benchmark::State& state)
{
    const auto bits = stream().bits();
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::wrapped_pattern_counts(bits, 13, exec_of(state)));
    label(state);
}

void BM_BlockLongestRuns(benchmark::State& state)
{
    const auto bits = stream().bits();
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::block_longest_runs(bits, 10000, exec_of(state)));
    label(state);
}

void BM_BlockOnes(benchmark::State& state)
{
    const auto bits = stream().bits();
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::block_ones(bits, 20, exec_of(state)));
    label(state);
}

void BM_MatrixRanks(benchmark::State& state)
{
    const auto bits = stream().bits();
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::gf2_matrix_ranks(bits, 32, 32, exec_of(state)));
    label(state);
}

void BM_Battery(benchmark::State& state)
{
    sts::TestParams params;
    params.exec = exec_of(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(sts::run_battery(stream(), params));
    label(state);
}

void BM_Experiment(benchmark::State& state)
{
    harness::ExperimentConfig cfg;
    cfg.generators = {harness::lcg_generator(), harness::hashdrbg_generator()};
    cfg.streams_per_generator = 4;
    cfg.bits_per_stream = 1'000'000;
    cfg.exec = exec_of(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(harness::run_experiment(cfg));
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

} // namespace

BENCHMARK(BM_PatternCounts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BlockLongestRuns)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BlockOnes)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatrixRanks)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Battery)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Experiment)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
