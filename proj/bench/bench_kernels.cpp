// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "tempograph/bus_sim.hpp"
#include "tempograph/dispersion.hpp"
#include "tempograph/distributed.hpp"
#include "tempograph/gate_sim.hpp"

using namespace tempograph;

namespace {

std::vector<double> alpha_grid(std::size_t n) {
  std::vector<double> a(n);
  for (std::size_t i = 0; i < n; ++i)
    a[i] = static_cast<double>(i) / static_cast<double>(n - 1);
  return a;
}

std::vector<std::uint64_t> n_grid(std::size_t n) {
  std::vector<std::uint64_t> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = i + 1;
  return v;
}

template <auto Fn> void BM_surface(benchmark::State &state) {
  const auto a = alpha_grid(static_cast<std::size_t>(state.range(0)));
  const auto n = n_grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(Fn(a, n));
}

template <auto Fn> void BM_sweep(benchmark::State &state) {
  const BusScenario base{{{"core", {0.25, 0, 0}, 1.0}}, {0, 0, 0}, 0.5};
  std::vector<std::size_t> ns;
  for (std::size_t n = 1; n <= static_cast<std::size_t>(state.range(0)); ++n)
    ns.push_back(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(Fn(base, ns));
}

template <auto Fn> void BM_history(benchmark::State &state) {
  std::vector<ProcessorSpec> specs;
  for (int i = 0; i < state.range(0); ++i)
    specs.push_back({"p" + std::to_string(i), 1971 + i % 50, 2300.0 * (i + 1),
                     1e-5 * (1 + i % 7), 1e6 * (1 + i % 13)});
  for (auto _ : state)
    benchmark::DoNotOptimize(Fn(specs, InteractionSpeed{}));
}

template <auto Fn> void BM_batch(benchmark::State &state) {
  std::vector<Netlist> nets;
  for (int i = 0; i < state.range(0); ++i) {
    Netlist nl = build_one_bit_adder(adder_layout(AdderLayout::Left), 1.0);
    set_adder_inputs(nl, i & 1, i & 2, i & 4);
    nets.push_back(std::move(nl));
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(Fn(nets, SimOptions{}));
}

} // namespace

BENCHMARK(BM_surface<serial::efficiency_surface>)->Arg(512);
BENCHMARK(BM_surface<efficiency_surface>)->Arg(512);
BENCHMARK(BM_sweep<serial::sweep_cores>)->Arg(256);
BENCHMARK(BM_sweep<sweep_cores>)->Arg(256);
BENCHMARK(BM_history<serial::history_table>)->Arg(4096);
BENCHMARK(BM_history<history_table>)->Arg(4096);
BENCHMARK(BM_batch<serial::simulate_batch>)->Arg(512);
BENCHMARK(BM_batch<simulate_batch>)->Arg(512);

BENCHMARK_MAIN();
