// Copyright 2026 The formula-flow Authors
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

// Timing for the hot paths: resistance on NAND trees by each backend, cut
// computation, witness solves and the game simulation.

#include <benchmark/benchmark.h>

#include <random>

#include "ff/bounds.hpp"
#include "ff/electrical.hpp"
#include "ff/nand.hpp"
#include "ff/spanprog.hpp"

namespace {

ff::Assignment random_input(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ff::Assignment x(n);
  for (std::size_t i = 0; i < n; ++i) x.set(i, (rng() & 1U) != 0);
  return x;
}

// Keeps every other leaf so both sides of the NAND tree stay busy.
ff::Network nand_subgraph(std::size_t depth) {
  ff::Network host = ff::formula_graph(ff::build_nand_tree(depth));
  return ff::subgraph(host, {random_input(host.num_edges(), depth)});
}

void BM_ResistanceSeriesParallelExact(benchmark::State& state) {
  ff::Network g = nand_subgraph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ff::effective_resistance<ff::Rational>(g, ff::ResistanceBackend::kSeriesParallel));
  }
}
BENCHMARK(BM_ResistanceSeriesParallelExact)->DenseRange(4, 12, 4);

void BM_ResistanceLaplacianFloat(benchmark::State& state) {
  ff::Network g = nand_subgraph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ff::effective_resistance<double>(g, ff::ResistanceBackend::kLaplacian));
  }
}
BENCHMARK(BM_ResistanceLaplacianFloat)->DenseRange(4, 8, 2);

void BM_EvaluatorSweep(benchmark::State& state) {
  ff::Network host = ff::formula_graph(ff::build_nand_tree(static_cast<std::size_t>(state.range(0))));
  ff::SpEvaluator eval(host);
  ff::Assignment x = random_input(host.num_edges(), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval.resistance<double>(ff::SubgraphSelector{x, ff::Polarity::kPrimal}));
    benchmark::DoNotOptimize(eval.cut(x));
  }
}
BENCHMARK(BM_EvaluatorSweep)->DenseRange(4, 12, 4);

void BM_CutMaxFlow(benchmark::State& state) {
  ff::Network host = ff::formula_graph(ff::build_nand_tree(static_cast<std::size_t>(state.range(0))));
  ff::Assignment x = random_input(host.num_edges(), 11);
  for (auto _ : state) benchmark::DoNotOptimize(ff::cut_size(host, x));
}
BENCHMARK(BM_CutMaxFlow)->DenseRange(4, 10, 2);

void BM_PositiveWitness(benchmark::State& state) {
  ff::Network host = ff::formula_graph(ff::build_nand_tree(static_cast<std::size_t>(state.range(0))));
  ff::SpanProgram program(host);
  ff::Assignment x(host.num_edges(), true);
  for (auto _ : state) benchmark::DoNotOptimize(ff::positive_witness(program, x));
}
BENCHMARK(BM_PositiveWitness)->DenseRange(2, 6, 2);

void BM_ApproxNegativeWitness(benchmark::State& state) {
  ff::Network host = ff::formula_graph(ff::build_nand_tree(static_cast<std::size_t>(state.range(0))));
  ff::SpanProgram program(host);
  ff::Assignment x(host.num_edges());  // all zeros: a 0-instance for even depth
  for (auto _ : state) benchmark::DoNotOptimize(ff::approx_negative_witness(program, x));
}
BENCHMARK(BM_ApproxNegativeWitness)->DenseRange(2, 6, 2);

void BM_Game(benchmark::State& state) {
  auto depth = static_cast<std::size_t>(state.range(0));
  ff::NandInstance tree(depth, ff::Assignment(std::size_t{1} << depth, true));
  for (auto _ : state) benchmark::DoNotOptimize(ff::simulate_game(tree, 1, 100));
}
BENCHMARK(BM_Game)->DenseRange(4, 12, 4);

void BM_FaultComplexity(benchmark::State& state) {
  auto depth = static_cast<std::size_t>(state.range(0));
  ff::Assignment x = random_input(std::size_t{1} << depth, 3);
  for (auto _ : state) benchmark::DoNotOptimize(ff::fault_complexity(depth, x));
}
BENCHMARK(BM_FaultComplexity)->DenseRange(4, 16, 4);

}  // namespace

BENCHMARK_MAIN();
