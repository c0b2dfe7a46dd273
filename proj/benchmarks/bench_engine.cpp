// Copyright 2026 The Chomp Lab Authors
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

#include "chomp/canonical.hpp"
#include "chomp/generators.hpp"
#include "chomp/grundy.hpp"
#include "chomp/oracle.hpp"
#include "chomp/symmetry.hpp"

namespace {

using namespace chomp;

void solve_family(benchmark::State& state, const char* family, bool reduction,
                  bool closed_forms) {
  const SimplicialComplex c = generate(family);
  EngineConfig config;
  config.use_reduction = reduction;
  config.use_closed_forms = closed_forms;
  for (auto _ : state) {
    TranspositionTable table;
    Engine engine(config, table);
    benchmark::DoNotOptimize(engine.value(c));
    state.counters["entries"] = static_cast<double>(table.size());
  }
}

BENCHMARK_CAPTURE(solve_family, wheel7_full, "wheel:7", true, true);
BENCHMARK_CAPTURE(solve_family, wheel7_plain, "wheel:7", false, false);
BENCHMARK_CAPTURE(solve_family, complete7_reduction, "complete:7", true, false);
BENCHMARK_CAPTURE(solve_family, complete7_plain, "complete:7", false, false);
BENCHMARK_CAPTURE(solve_family, gmk_3_3_plain, "gmk:3,3", false, false);
BENCHMARK_CAPTURE(solve_family, torus_reduction, "torus_3x3", true, false);
BENCHMARK_CAPTURE(solve_family, er8_plain, "erdos_renyi:n=8,p=0.5,seed=7", false,
                  false);

void oracle_family(benchmark::State& state, const char* family) {
  const SimplicialComplex c = generate(family);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_grundy(c));
}

BENCHMARK_CAPTURE(oracle_family, wheel5, "wheel:5");
BENCHMARK_CAPTURE(oracle_family, er8, "erdos_renyi:n=8,p=0.5,seed=7");

void canonical(benchmark::State& state, const char* family) {
  const SimplicialComplex c = generate(family);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(c));
}

BENCHMARK_CAPTURE(canonical, wheel12, "wheel:12");
BENCHMARK_CAPTURE(canonical, torus, "torus_3x3");
BENCHMARK_CAPTURE(canonical, er12, "erdos_renyi:n=12,p=0.4,seed=3");

void involutions(benchmark::State& state, const char* family) {
  const SimplicialComplex c = generate(family);
  for (auto _ : state) benchmark::DoNotOptimize(search_reductions(c));
}

BENCHMARK_CAPTURE(involutions, wheel10, "wheel:10");
BENCHMARK_CAPTURE(involutions, complete9, "complete:9");
BENCHMARK_CAPTURE(involutions, torus, "torus_3x3");

}  // namespace

BENCHMARK_MAIN();
