// Copyright 2026 The gmwis Authors
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

#include "gmwis/decomposition.hpp"
#include "gmwis/generate.hpp"
#include "gmwis/patterns.hpp"
#include "gmwis/solver.hpp"

namespace {

gmwis::WeightedGraph in_class(int level, int n, std::uint64_t seed) {
  gmwis::GenSpec spec;
  spec.level = level;
  spec.n = n;
  spec.seed = seed;
  return gmwis::generate(spec);
}

gmwis::WeightedGraph arbitrary(int n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return gmwis::random_graph(n, density, rng, 0, 100);
}

void BM_Solve(benchmark::State& state) {
  const auto g = in_class(0, static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(gmwis::solve(g).weight);
}
BENCHMARK(BM_Solve)->Arg(12)->Arg(20)->Arg(28);

void BM_MwisExact(benchmark::State& state) {
  const auto g = arbitrary(static_cast<int>(state.range(0)), 0.3, 12);
  for (auto _ : state) benchmark::DoNotOptimize(gmwis::mwis_exact(g).weight);
}
BENCHMARK(BM_MwisExact)->Arg(20)->Arg(40)->Arg(60);

void BM_FindInduced(benchmark::State& state) {
  const auto pattern = gmwis::catalog("co-chair");
  const auto g = in_class(0, static_cast<int>(state.range(0)), 13);
  for (auto _ : state) benchmark::DoNotOptimize(gmwis::find_induced(pattern, g).has_value());
}
BENCHMARK(BM_FindInduced)->Arg(16)->Arg(32);

void BM_ModularDecomposition(benchmark::State& state) {
  const auto g = arbitrary(static_cast<int>(state.range(0)), 0.5, 14);
  for (auto _ : state) benchmark::DoNotOptimize(gmwis::modular_decomposition(g).root.children.size());
}
BENCHMARK(BM_ModularDecomposition)->Arg(16)->Arg(48);

void BM_CliqueCutsetDecomposition(benchmark::State& state) {
  const auto g = arbitrary(static_cast<int>(state.range(0)), 0.25, 15);
  if (!gmwis::is_connected(g)) {
    state.SkipWithError("sample graph is disconnected");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(gmwis::clique_cutset_decompose(g).internal_count());
}
BENCHMARK(BM_CliqueCutsetDecomposition)->Arg(16)->Arg(48);

}  // namespace
BENCHMARK_MAIN();
