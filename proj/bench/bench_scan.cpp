// Serial reference vs OpenMP scan kernels.

#include <benchmark/benchmark.h>

#include "chipgame/prob.hpp"
#include "chipgame/verify.hpp"

using namespace chipgame;

namespace {

Execution policy(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_ScanThm1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scan_thm1(20, policy(state)));
}
BENCHMARK(BM_ScanThm1)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_ScanThm2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scan_thm2(14, 14, policy(state)));
}
BENCHMARK(BM_ScanThm2)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_ScanCorollary(benchmark::State& state) {
  const std::vector<Rational> biases{Rational(1, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(scan_corollary(9, 9, biases, policy(state)));
}
BENCHMARK(BM_ScanCorollary)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_Simulate(benchmark::State& state) {
  const GameParams params(1, 2, 11, 12);
  SimulationOptions options;
  options.execution = policy(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate(params, Rational(1, 2), 100000, 7, options));
  }
}
BENCHMARK(BM_Simulate)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
