#include <benchmark/benchmark.h>

#include "netres/connectivity.hpp"
#include "netres/generators.hpp"
#include "netres/spectral.hpp"
#include "netres/topology.hpp"

using namespace netres;

namespace {

Graph er(std::size_t n, double p) { return generate({family::ErdosRenyi{n, p}, 42}); }

void BM_CliqueComplex(benchmark::State& state) {
  auto g = er(static_cast<std::size_t>(state.range(0)), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(clique_complex(g, 3));
}
BENCHMARK(BM_CliqueComplex)->Arg(20)->Arg(40)->Arg(80);

void BM_Lambda2(benchmark::State& state) {
  auto g = er(static_cast<std::size_t>(state.range(0)), 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(algebraic_connectivity(g));
}
BENCHMARK(BM_Lambda2)->Arg(50)->Arg(100)->Arg(200);

void BM_BettiExact(benchmark::State& state) {
  auto c = clique_complex(er(static_cast<std::size_t>(state.range(0)), 0.3), 3);
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(c));
}
BENCHMARK(BM_BettiExact)->Arg(15)->Arg(25);

void BM_BettiGF2(benchmark::State& state) {
  auto c = clique_complex(er(static_cast<std::size_t>(state.range(0)), 0.3), 3);
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(c, RankField::gf2));
}
BENCHMARK(BM_BettiGF2)->Arg(15)->Arg(25);

void BM_HodgeSpectrum(benchmark::State& state) {
  auto c = clique_complex(er(static_cast<std::size_t>(state.range(0)), 0.3), 2);
  for (auto _ : state) benchmark::DoNotOptimize(hodge_spectrum(c, 1));
}
BENCHMARK(BM_HodgeSpectrum)->Arg(15)->Arg(25);

void BM_LambdaSize(benchmark::State& state) {
  auto g = er(static_cast<std::size_t>(state.range(0)), 0.3);
  for (auto _ : state)
    benchmark::DoNotOptimize(lambda_s(g, 3, CutMode::size_bounded));
}
BENCHMARK(BM_LambdaSize)->Arg(10)->Arg(14);

void BM_LambdaCount(benchmark::State& state) {
  auto g = er(static_cast<std::size_t>(state.range(0)), 0.4);
  for (auto _ : state)
    benchmark::DoNotOptimize(lambda_s(g, 3, CutMode::component_count));
}
BENCHMARK(BM_LambdaCount)->Arg(10)->Arg(14);

void BM_EdgeConnectivity(benchmark::State& state) {
  auto g = er(static_cast<std::size_t>(state.range(0)), 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(classical_edge_connectivity(g));
}
BENCHMARK(BM_EdgeConnectivity)->Arg(50)->Arg(200);

}  // namespace
BENCHMARK_MAIN();
