// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "latwidth/cone_ip.hpp"
#include "latwidth/corpus.hpp"
#include "latwidth/decomposition.hpp"
#include "latwidth/exact_linalg.hpp"
#include "latwidth/simplex_opt.hpp"
#include "latwidth/width.hpp"

using namespace latwidth;

namespace {

// Args: dimension, target |det|.
void BM_Decompose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto d = static_cast<std::uint64_t>(state.range(1));
  IntMatrix a = corpus::gen_cone(n, d, 17);
  std::size_t pieces = 0;
  for (auto _ : state) {
    auto r = decompose(a);
    pieces = r.pieces.size();
    benchmark::DoNotOptimize(r);
  }
  state.counters["pieces"] = static_cast<double>(pieces);
}
BENCHMARK(BM_Decompose)
    ->ArgsProduct({{2, 3, 4}, {8, 64, 512}})
    ->Unit(benchmark::kMicrosecond);

void BM_Snf(benchmark::State& state) {
  IntMatrix a = corpus::gen_cone(static_cast<std::size_t>(state.range(0)), 360, 5);
  for (auto _ : state) benchmark::DoNotOptimize(snf(a));
}
BENCHMARK(BM_Snf)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

// Args: dimension, coordinate bound.
void BM_Width(benchmark::State& state) {
  HSimplex s = corpus::gen_simplex_h(static_cast<std::size_t>(state.range(0)), state.range(1), 3);
  for (auto _ : state) benchmark::DoNotOptimize(width(s));
}
BENCHMARK(BM_Width)->Args({2, 5})->Args({2, 20})->Args({3, 3})->Args({3, 6})
    ->Unit(benchmark::kMillisecond);

void BM_WidthLatticeFree(benchmark::State& state) {
  HSimplex s = corpus::gen_lattice_free_simplex(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(width_lattice_free(s));
}
BENCHMARK(BM_WidthLatticeFree)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_ConeIp(benchmark::State& state) {
  ConeIpInstance inst = corpus::gen_cone_ip(static_cast<std::size_t>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(solve(inst));
}
BENCHMARK(BM_ConeIp)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

// Args: dimension, edge determinant cap.
void BM_Punctured(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  VSimplex s = corpus::gen_simplex_v(n, 5, 21, static_cast<std::uint64_t>(state.range(1)));
  IntVector c(n, Integer(1));
  c[0] = -2;
  for (auto _ : state) benchmark::DoNotOptimize(optimize_punctured({s, c}));
}
BENCHMARK(BM_Punctured)->Args({2, 60})->Args({3, 60})->Args({4, 60})
    ->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
