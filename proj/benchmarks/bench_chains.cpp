// Copyright 2026 The gammahom Authors
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

#include <random>

#include "gammahom/gammahom.hpp"

using namespace gammahom;

namespace {

SparseMatrix random_sparse(std::size_t rows, std::size_t cols, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> value(-3, 3);
  std::vector<Triplet> t;
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r)
      if (keep(rng)) t.emplace_back(r, c, value(rng));
  return SparseMatrix::from_triplets(rows, cols, t);
}

void BM_FieldRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SparseMatrix m = random_sparse(n, n, 8.0 / static_cast<double>(n), 1);
  for (auto _ : state) benchmark::DoNotOptimize(field_rank(m, 2));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FieldRank)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_SmithForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SparseMatrix m = random_sparse(n, n, 0.2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m).rank());
}
BENCHMARK(BM_SmithForm)->DenseRange(10, 50, 20);

// Building the normalized basis and streaming the top boundary of one tower
// level; fresh chains each iteration so nothing is cached.
void BM_TowerLevelHomology(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MSSetPtr level = spectrum_level(discrete_abelian({2}), n);
  for (auto _ : state) {
    const NormalizedChains chains(level);
    benchmark::DoNotOptimize(chains.homology(2 * n - 1, Ring::prime_field(2)).rank);
  }
}
BENCHMARK(BM_TowerLevelHomology)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_StableTable(benchmark::State& state) {
  const int i_max = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(spectrum_homology(discrete_abelian({2}), Ring::prime_field(2), i_max));
}
BENCHMARK(BM_StableTable)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
