// Serial reference vs OpenMP kernels on the grids the CLI uses by default.
// Set WGA_THREADS to cap the parallel variants.

#include <benchmark/benchmark.h>

#include "wga/correlation.hpp"
#include "wga/grid.hpp"
#include "wga/onephoton.hpp"
#include "wga/parallel.hpp"
#include "wga/twophoton.hpp"

namespace {

wga::ModelParams single_mode() {
  wga::ModelParams p;
  p.g_a = 5.0;
  p.g_b = 5.0;
  return p;
}

wga::ModelParams two_mode() {
  wga::ModelParams p = single_mode();
  p.Omega = 2.0;
  p.h = wga::cplx{0.0, 5.0};
  return p;
}

void spectrum_serial(benchmark::State& state) {
  const auto k = wga::uniform_grid(-15.0, 15.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wga::reference::spectrum_scan(two_mode(), k));
}

void spectrum_parallel(benchmark::State& state) {
  const auto k = wga::uniform_grid(-15.0, 15.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wga::spectrum_scan(two_mode(), k));
  state.counters["threads"] = wga::worker_count();
}

void fluorescence_serial(benchmark::State& state) {
  const auto g = wga::uniform_grid(-15.0, 15.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wga::reference::fluorescence_map(single_mode(), 13.0, g, g));
}

void fluorescence_parallel(benchmark::State& state) {
  const auto g = wga::uniform_grid(-15.0, 15.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wga::fluorescence_map(single_mode(), 13.0, g, g));
  state.counters["threads"] = wga::worker_count();
}

void g2map_serial(benchmark::State& state) {
  const auto e = wga::uniform_grid(-15.0, 15.0, static_cast<std::size_t>(state.range(0)));
  const auto t = wga::uniform_grid(-wga::kPi, wga::kPi, 181);
  for (auto _ : state) benchmark::DoNotOptimize(wga::reference::g2_zero_map(two_mode(), e, t));
}

void g2map_parallel(benchmark::State& state) {
  const auto e = wga::uniform_grid(-15.0, 15.0, static_cast<std::size_t>(state.range(0)));
  const auto t = wga::uniform_grid(-wga::kPi, wga::kPi, 181);
  for (auto _ : state) benchmark::DoNotOptimize(wga::g2_zero_map(two_mode(), e, t));
  state.counters["threads"] = wga::worker_count();
}

}  // namespace

BENCHMARK(spectrum_serial)->Arg(2001)->Arg(20001)->Unit(benchmark::kMillisecond);
BENCHMARK(spectrum_parallel)->Arg(2001)->Arg(20001)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(fluorescence_serial)->Arg(101)->Arg(201)->Unit(benchmark::kMillisecond);
BENCHMARK(fluorescence_parallel)->Arg(101)->Arg(201)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(g2map_serial)->Arg(101)->Arg(301)->Unit(benchmark::kMillisecond);
BENCHMARK(g2map_parallel)->Arg(101)->Arg(301)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
