// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

// Per-call cost of the hot kernels against grid depth (state.range(0) = N1 = N2).

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dyadic/bmo.hpp"
#include "dyadic/harness.hpp"
#include "dyadic/operators.hpp"
#include "dyadic/sqmax.hpp"
#include "dyadic/weights.hpp"

using namespace dyadic;

namespace {

Grid square_grid(const benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  return Grid(d, d);
}

void BM_Maximal(benchmark::State& state) {
  const Grid g = square_grid(state);
  const std::vector<GridFunction> fs{random_function(g, 1), random_function(g, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(maximal(fs));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(g.cells()));
}
BENCHMARK(BM_Maximal)->DenseRange(3, 8)->Complexity();

void BM_SquareFull(benchmark::State& state) {
  const Grid g = square_grid(state);
  const GridFunction f = random_function(g, 3);
  for (auto _ : state) benchmark::DoNotOptimize(square_full(f));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(g.cells()));
}
BENCHMARK(BM_SquareFull)->DenseRange(3, 8)->Complexity();

void BM_ApplyShift(benchmark::State& state) {
  const Grid g = square_grid(state);
  const ShiftSpec spec = make_shift(g, 2, Complexity{1, 1}, 4);
  const std::vector<GridFunction> fs{random_function(g, 5), random_function(g, 6)};
  for (auto _ : state) benchmark::DoNotOptimize(apply_shift(spec, fs));
}
BENCHMARK(BM_ApplyShift)->DenseRange(3, 6);

void BM_ProductBmoSampled(benchmark::State& state) {
  const Grid g = square_grid(state);
  RectangleCoefficients a(g);
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  for (auto& x : a.data()) x = normal(rng);
  const BmoStrategy strategy = BmoStrategy::sampled(256, 8);
  for (auto _ : state) benchmark::DoNotOptimize(product_bmo(a, strategy));
}
BENCHMARK(BM_ProductBmoSampled)->DenseRange(3, 6);

void BM_MultilinearConstant(benchmark::State& state) {
  const Grid g = square_grid(state);
  const std::vector<WeightSpec> specs(2, weight_spec::ExpHaar{});
  const WeightTuple w = sample_tuple(g, specs, 9);
  const ExponentTuple p({Exponent::finite(3.0), Exponent::finite(2.5)});
  for (auto _ : state) benchmark::DoNotOptimize(multilinear_constant(w, p));
}
BENCHMARK(BM_MultilinearConstant)->DenseRange(3, 8);

}  // namespace

BENCHMARK_MAIN();
