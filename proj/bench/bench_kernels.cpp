// Copyright 2026 The qdstar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qdstar/qudit.hpp"
#include "qdstar/representation.hpp"
#include "qdstar/star_product.hpp"

namespace {

using namespace qdstar;

void BM_KernelParallel(benchmark::State& state) {
  const auto b = standard_basis(Representation::kProbability, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_kernel(b));
}

void BM_KernelSerial(benchmark::State& state) {
  const auto b = standard_basis(Representation::kProbability, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::compute_kernel(b));
}

void BM_DequantizersParallel(benchmark::State& state) {
  const std::size_t d = state.range(0);
  const auto par = build_parametrization(d);
  const auto spec = qudit_probability_symbol_spec(d);
  for (auto _ : state) benchmark::DoNotOptimize(solve_dequantizers(par, spec));
}

void BM_DequantizersSerial(benchmark::State& state) {
  const std::size_t d = state.range(0);
  const auto par = build_parametrization(d);
  const auto spec = qudit_probability_symbol_spec(d);
  for (auto _ : state) benchmark::DoNotOptimize(serial::solve_dequantizers(par, spec));
}

StructureConstants constants_for(std::size_t d) {
  return structure_constants(compute_kernel(standard_basis(Representation::kMeanValue, d)));
}

void BM_JacobiParallel(benchmark::State& state) {
  const auto c = constants_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_deviation(c));
}

void BM_JacobiSerial(benchmark::State& state) {
  const auto c = constants_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::jacobi_deviation(c));
}

}  // namespace

BENCHMARK(BM_KernelParallel)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelSerial)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DequantizersParallel)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DequantizersSerial)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JacobiParallel)->DenseRange(3, 6, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JacobiSerial)->DenseRange(3, 6, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
