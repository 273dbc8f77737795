#include <benchmark/benchmark.h>

#include <complex>
#include <numbers>

#include "hexisr/isr_omni.hpp"
#include "hexisr/montecarlo.hpp"
#include "hexisr/sinr.hpp"

namespace {

using namespace hexisr;

void BM_H0(benchmark::State& state) {
  const OmniIsr omni(1.5);
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(omni.h0(x));
    x = x < 0.55 ? x + 0.01 : 0.1;
  }
}
BENCHMARK(BM_H0);

void BM_ClosedForm(benchmark::State& state) {
  const OmniIsr omni(1.5);
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(omni.closed(x, 0.3));
    x = x < 0.55 ? x + 0.01 : 0.1;
  }
}
BENCHMARK(BM_ClosedForm);

void BM_DirectSum(benchmark::State& state) {
  NetworkConfig cfg;
  const auto m = Location::polar(0.4 * cfg.delta, 0.3);
  const auto rings = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(direct_isr(m, cfg, rings));
}
BENCHMARK(BM_DirectSum)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_SummerBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(LatticeIsrSummer(1.5, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SummerBuild)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_SummerQuery(benchmark::State& state) {
  const LatticeIsrSummer summer(1.5, 1000);
  const auto m = std::polar(0.4, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(summer.isr(m));
}
BENCHMARK(BM_SummerQuery)->Unit(benchmark::kMicrosecond);

void BM_AnalyticCcdf(benchmark::State& state) {
  const SinrModel model(NetworkConfig{});
  const auto grid = sinr_grid();
  const auto inv = state.range(0) == 0 ? Inverter::SeriesReversion : Inverter::Bisection;
  for (auto _ : state) benchmark::DoNotOptimize(model.ccdf(grid, TrafficModel::uniform(), inv));
}
BENCHMARK(BM_AnalyticCcdf)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
