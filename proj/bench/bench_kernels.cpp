// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include <vector>

#include "logitfp/fixed_points.hpp"
#include "logitfp/verify.hpp"

namespace {

std::vector<double> beta_grid(int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = 20.0 * i / (n - 1);
  return g;
}

void BM_Sweep(benchmark::State& state) {
  const auto grid = beta_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(logitfp::sweep({-1, 2}, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepSerial(benchmark::State& state) {
  const auto grid = beta_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(logitfp::sweep_serial({-1, 2}, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

logitfp::GridSpec small_grid() {
  return {{-2, -1, 0.5, 2}, {-2, -0.5, 1, 3}, {0, 1, 2.5, 4, 8, 16}};
}

void BM_VerifyGrid(benchmark::State& state) {
  const auto grid = small_grid();
  for (auto _ : state) benchmark::DoNotOptimize(logitfp::verify_grid(grid));
}

void BM_VerifyGridSerial(benchmark::State& state) {
  const auto grid = small_grid();
  for (auto _ : state) benchmark::DoNotOptimize(logitfp::verify_grid_serial(grid));
}

}  // namespace

BENCHMARK(BM_Sweep)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyGrid)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyGridSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
