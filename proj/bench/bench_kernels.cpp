// Copyright 2026 The qgraph Authors
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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "qgraph/graph.hpp"
#include "qgraph/homcount.hpp"
#include "qgraph/verify.hpp"

using namespace qgraph;

namespace {

void BM_HomSerial(benchmark::State& state) {
  const Graph g = graphs::cycle(static_cast<int>(state.range(0)));
  const Graph h = graphs::complete(6);
  for (auto _ : state) benchmark::DoNotOptimize(hom_count_serial(g, h));
}

void BM_HomParallel(benchmark::State& state) {
  const Graph g = graphs::cycle(static_cast<int>(state.range(0)));
  const Graph h = graphs::complete(6);
  for (auto _ : state) benchmark::DoNotOptimize(hom_count(g, h));
}

void BM_QuoSerial(benchmark::State& state) {
  const Graph g = graphs::path(static_cast<int>(state.range(0)));
  const Graph h = graphs::path(4);
  for (auto _ : state) benchmark::DoNotOptimize(quo_count_serial(g, h));
}

void BM_QuoParallel(benchmark::State& state) {
  const Graph g = graphs::path(static_cast<int>(state.range(0)));
  const Graph h = graphs::path(4);
  for (auto _ : state) benchmark::DoNotOptimize(quo_count(g, h));
}

void run_suite_bench(benchmark::State& state, const char* name, bool parallel) {
  VerifyOptions o;
  o.parallel = parallel;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(name, o).passed);
}

void BM_FractionalSuiteSerial(benchmark::State& state) { run_suite_bench(state, "fractional", false); }
void BM_FractionalSuiteParallel(benchmark::State& state) { run_suite_bench(state, "fractional", true); }

}  // namespace

BENCHMARK(BM_HomSerial)->Arg(6)->Arg(8);
BENCHMARK(BM_HomParallel)->Arg(6)->Arg(8);
BENCHMARK(BM_QuoSerial)->Arg(6)->Arg(8);
BENCHMARK(BM_QuoParallel)->Arg(6)->Arg(8);
BENCHMARK(BM_FractionalSuiteSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FractionalSuiteParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
