// Copyright 2026 The packcrit Authors
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

#include <string>

#include "packcrit/criticality.hpp"
#include "packcrit/enumeration.hpp"
#include "packcrit/families.hpp"
#include "packcrit/independence.hpp"
#include "packcrit/packing.hpp"

namespace {

using namespace packcrit;

Graph family(const std::string& text) { return build_graph(parse_family_spec(text)); }

void BM_ChiRhoCycle(benchmark::State& state) {
  const Graph g = build_graph(family::Cycle{static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(chi_rho(g).value);
}
BENCHMARK(BM_ChiRhoCycle)->DenseRange(8, 20, 4);

void BM_ChiRhoPath(benchmark::State& state) {
  const Graph g = build_graph(family::Path{static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(chi_rho(g).value);
}
BENCHMARK(BM_ChiRhoPath)->DenseRange(8, 24, 8);

void BM_ChiRhoCactus(benchmark::State& state) {
  const Graph g = family("G2^5(1,2;0,2)");
  for (auto _ : state) benchmark::DoNotOptimize(chi_rho(g).value);
}
BENCHMARK(BM_ChiRhoCactus);

void BM_IndependenceNumberCycle(benchmark::State& state) {
  const Graph g = build_graph(family::Cycle{static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(independence_number(g));
}
BENCHMARK(BM_IndependenceNumberCycle)->RangeMultiplier(2)->Range(8, 64);

void BM_EdgeCriticalCactus(benchmark::State& state) {
  const Graph g = family("G3^3(0,2;0,2;0,3)");
  for (auto _ : state) benchmark::DoNotOptimize(is_edge_critical(g).critical);
}
BENCHMARK(BM_EdgeCriticalCactus)->Unit(benchmark::kMillisecond);

void BM_EnumerateConnected(benchmark::State& state) {
  EnumerationFilter filter;
  filter.max_n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(filter).size());
}
BENCHMARK(BM_EnumerateConnected)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_EnumerateCacti(benchmark::State& state) {
  EnumerationFilter filter;
  filter.max_n = static_cast<int>(state.range(0));
  filter.graph_class = GraphClass::kCactus;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(filter).size());
}
BENCHMARK(BM_EnumerateCacti)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
