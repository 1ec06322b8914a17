#include <benchmark/benchmark.h>

#include "tiltfactor/modular.hpp"

using namespace tiltfactor;

namespace {

void BM_BuildRootDatum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_root_datum('E', 8));
}
BENCHMARK(BM_BuildRootDatum);

void BM_OrbitRegularD4(benchmark::State& state) {
  auto d = build_root_datum('D', 4);
  for (auto _ : state) benchmark::DoNotOptimize(orbit(d, d.rho()));
}
BENCHMARK(BM_OrbitRegularD4);

void BM_WeylCharacterSteinbergA3(benchmark::State& state) {
  auto d = build_root_datum('A', 3);
  const Weight st({4, 4, 4});  // (p-1)rho at p = 5
  for (auto _ : state) benchmark::DoNotOptimize(weyl_character(d, st));
}
BENCHMARK(BM_WeylCharacterSteinbergA3);

void BM_WeylCharacterSteinbergB3(benchmark::State& state) {
  auto d = build_root_datum('B', 3);
  const Weight st({2, 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(weyl_character(d, st));
}
BENCHMARK(BM_WeylCharacterSteinbergB3);

void BM_TensorSteinbergSpinD4(benchmark::State& state) {
  auto d = build_root_datum('D', 4);
  auto st = weyl_character(d, Weight({1, 1, 1, 1}));
  auto spin = weyl_character(d, Weight({0, 0, 0, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(tensor_product(st, spin));
}
BENCHMARK(BM_TensorSteinbergSpinD4);

void BM_DecomposeAdjointSquareA3(benchmark::State& state) {
  auto d = build_root_datum('A', 3);
  auto adj = weyl_character(d, Weight({1, 0, 1}));
  auto prod = tensor_product(adj, adj);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_weyl(prod));
}
BENCHMARK(BM_DecomposeAdjointSquareA3);

void BM_TiltingCharacterA2(benchmark::State& state) {
  auto d = build_root_datum('A', 2);
  PrimeContext ctx(d, 3);
  const Weight hw({18, 11});  // 9*(1,0) + 8*rho + (1,3), a covered r=2 form
  for (auto _ : state) benchmark::DoNotOptimize(tilting_character(ctx, hw));
}
BENCHMARK(BM_TiltingCharacterA2);

void BM_A1TiltingChain(benchmark::State& state) {
  auto d = build_root_datum('A', 1);
  PrimeContext ctx(d, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a1_tilting_character(ctx, 200));
}
BENCHMARK(BM_A1TiltingChain);

}  // namespace

BENCHMARK_MAIN();
