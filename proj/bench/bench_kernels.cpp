// Copyright 2026 The infoex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Parallel kernels against their serial reference implementations.
#include <benchmark/benchmark.h>

#include <random>

#include "infoex/equilibrium.hpp"
#include "infoex/graph.hpp"
#include "infoex/model.hpp"
#include "infoex/reference.hpp"
#include "infoex/subset_search.hpp"

namespace {

using namespace infoex;

Model bench_model(std::size_t k) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> util(-3, 3);
  std::vector<std::string> alphabet;
  for (std::size_t i = 0; i < k; ++i) alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<Model::Table> tables(2, Model::Table(k, std::vector<Rational>(k)));
  for (auto& table : tables) {
    for (auto& row : table) {
      for (auto& v : row) v = Rational(util(rng));
    }
  }
  return Model(alphabet, {"t0", "t1"}, {Rational(1, 3), Rational(2, 3)}, tables);
}

void BM_SubsetSearchParallel(benchmark::State& state) {
  Model m = bench_model(static_cast<std::size_t>(state.range(0)));
  SequenceSpace space(m, 2);
  SequenceScorer scorer(m, space);
  auto problem = make_subset_problem(scorer);
  for (auto _ : state) benchmark::DoNotOptimize(search_subsets(problem, true, 16));
}

void BM_SubsetSearchParallelUnpruned(benchmark::State& state) {
  Model m = bench_model(static_cast<std::size_t>(state.range(0)));
  SequenceSpace space(m, 2);
  SequenceScorer scorer(m, space);
  auto problem = make_subset_problem(scorer);
  for (auto _ : state) benchmark::DoNotOptimize(search_subsets(problem, false, 16));
}

void BM_SubsetSearchSerial(benchmark::State& state) {
  Model m = bench_model(static_cast<std::size_t>(state.range(0)));
  SequenceSpace space(m, 2);
  SequenceScorer scorer(m, space);
  auto problem = make_subset_problem(scorer);
  for (auto _ : state) benchmark::DoNotOptimize(search_subsets_serial(problem, 16));
}

void BM_SenderGraphParallel(benchmark::State& state) {
  Model m = bench_model(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_sender_graph(m, type_id(1), n));
}

void BM_SenderGraphSerial(benchmark::State& state) {
  Model m = bench_model(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::build_sender_graph(m, type_id(1), n));
}

}  // namespace

// |X| = 4 at n = 2 gives 16 sequences (65535 subsets).
BENCHMARK(BM_SubsetSearchParallel)->Arg(3)->Arg(4);
BENCHMARK(BM_SubsetSearchParallelUnpruned)->Arg(3)->Arg(4);
BENCHMARK(BM_SubsetSearchSerial)->Arg(3)->Arg(4);
BENCHMARK(BM_SenderGraphParallel)->Arg(4)->Arg(5);
BENCHMARK(BM_SenderGraphSerial)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
