#include "mtv/closed_forms.hpp"
#include "mtv/euler.hpp"
#include "mtv/series.hpp"
#include "mtv/symfun.hpp"
#include "mtv/verify.hpp"

#include <benchmark/benchmark.h>

static void BM_EulerNumbers(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(mtv::euler_numbers(state.range(0)));
}
BENCHMARK(BM_EulerNumbers)->Arg(20)->Arg(100)->Arg(400);

static void BM_PowerSums(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(mtv::oracle::power_sums(state.range(0)));
}
BENCHMARK(BM_PowerSums)->Arg(12)->Arg(48);

static void BM_SumOracleTable(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(mtv::oracle::sum_oracle_table(4, state.range(0), false));
}
BENCHMARK(BM_SumOracleTable)->Arg(4)->Arg(8);

static void BM_EvenStringClosedForm(benchmark::State& state) {
    const auto two_m = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mtv::closed::t_string_even_arg(two_m, 3));
        benchmark::DoNotOptimize(mtv::closed::tstar_string_even_arg(two_m, 3));
    }
}
BENCHMARK(BM_EvenStringClosedForm)->Arg(4)->Arg(8)->Arg(12);

static void BM_TNumeric(benchmark::State& state) {
    const mtv::numeric::Composition alpha({2, 3, 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(mtv::numeric::t_numeric(alpha, false, 128, static_cast<unsigned long>(state.range(0))));
}
BENCHMARK(BM_TNumeric)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_SumNumericTable(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(mtv::numeric::sum_numeric_table(3, static_cast<unsigned>(state.range(0)), true, 128, 10000));
}
BENCHMARK(BM_SumNumericTable)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_VerifyAll(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(mtv::verify::run_suite("all"));
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
