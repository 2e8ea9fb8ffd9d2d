#include <benchmark/benchmark.h>

#include <cmath>

#include "cylvar/hamiltonian.hpp"
#include "cylvar/optimizer.hpp"

using namespace cylvar;

namespace {

const TrialParams kParams{1.04, 0.09, 2.8, {}};
const SystemConfig kConfig{1.0, 5.0};

void BM_Moments(benchmark::State& state, Execution ex) {
  const int n = static_cast<int>(state.range(0));
  const CylinderGrid grid = make_cylinder_grid(5.0, {n, n, 1.0, {}});
  auto f = [](double rho, double z) {
    const double e = std::exp(-std::hypot(rho, z));
    return std::array<double, 3>{e, e * rho, e * std::abs(z)};
  };
  for (auto _ : state) benchmark::DoNotOptimize(integrate_moments<3>(grid, f, ex));
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_Energy(benchmark::State& state, Execution ex) {
  const int n = static_cast<int>(state.range(0));
  const QuadratureSpec spec{n, n, {}, {}};
  for (auto _ : state) benchmark::DoNotOptimize(energy(kParams, kConfig, spec, ex).total);
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_Minimize(benchmark::State& state, Execution ex) {
  const OptimizeRequest req = make_request(kConfig);
  for (auto _ : state) benchmark::DoNotOptimize(minimize(req, QuadratureSpec::production(), ex).energy.total);
}

void BM_Scan(benchmark::State& state) {
  std::vector<SystemConfig> grid;
  for (double B : {0.0, 0.4, 0.8, 1.0})
    for (double R : {2.0, 3.0, 4.0}) grid.push_back({B, R});
  ScanTemplate tmpl;
  tmpl.with_observables = false;
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan(grid, tmpl, QuadratureSpec::production(), jobs));
}

} // namespace

BENCHMARK_CAPTURE(BM_Moments, serial, Execution::serial)->Arg(64)->Arg(96)->Arg(256);
BENCHMARK_CAPTURE(BM_Moments, parallel, Execution::parallel)->Arg(64)->Arg(96)->Arg(256);
BENCHMARK_CAPTURE(BM_Energy, serial, Execution::serial)->Arg(64)->Arg(96)->Arg(256);
BENCHMARK_CAPTURE(BM_Energy, parallel, Execution::parallel)->Arg(64)->Arg(96)->Arg(256);
BENCHMARK_CAPTURE(BM_Minimize, serial, Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Minimize, parallel, Execution::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Scan)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
