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

// Structural properties checked over enumerated graphs. The acceptance binary
// repeats the heavier ones over the full ranges.

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "packcrit/criticality.hpp"
#include "packcrit/enumeration.hpp"
#include "packcrit/families.hpp"
#include "packcrit/graph_io.hpp"
#include "packcrit/independence.hpp"
#include "packcrit/packing.hpp"

namespace packcrit {
namespace {

std::vector<Graph> connected_upto(int n) {
  EnumerationFilter f;
  f.max_n = n;
  return enumerate_graphs(f);
}

TEST(Properties, AlphaEdgeDeletionBounds) {
  for (const Graph& g : connected_upto(6)) {
    const int alpha = independence_number(g);
    for (const Edge& e : g.edges()) {
      const int after = independence_number(delete_edge(g, e));
      ASSERT_GE(after, alpha);
      ASSERT_LE(after, alpha + 1);
    }
  }
}

TEST(Properties, UpperBoundAndDiameterTwoEquality) {
  for (const Graph& g : connected_upto(6)) {
    const int value = chi_rho(g).value;
    const int bound = g.order() - independence_number(g) + 1;
    ASSERT_LE(value, bound) << emit_graph6(g);
    if (g.order() > 1 && diameter(g) == 2) {
      ASSERT_EQ(value, bound) << emit_graph6(g);
    }
  }
}

TEST(Properties, ChiRhoMonotoneUnderEdgeDeletion) {
  for (const Graph& g : connected_upto(6)) {
    const int value = chi_rho(g).value;
    for (const Edge& e : g.edges()) ASSERT_LE(chi_rho(delete_edge(g, e)).value, value) << emit_graph6(g);
  }
}

TEST(Properties, ChiRhoInvariantUnderRelabeling) {
  std::mt19937 rng(17);
  for (const Graph& g : connected_upto(6)) {
    std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(g.order());
    for (const Edge& e : g.edges()) h.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    ASSERT_EQ(chi_rho(g).value, chi_rho(h).value);
    ASSERT_EQ(invariant_hash(g), invariant_hash(h));
    ASSERT_TRUE(is_isomorphic(g, h));
  }
}

TEST(Properties, BridgeComponentsNeverExceedDiameter) {
  for (const Graph& g : connected_upto(7)) {
    if (g.order() < 2) continue;
    const int diam = diameter(g);
    for (const Edge& e : bridges(g)) {
      const Graph cut = delete_edge(g, e);
      for (const auto& part : components(cut)) ASSERT_LE(diameter(induced_subgraph(cut, part).graph), diam);
    }
  }
}

TEST(Properties, CycleMetrics) {
  for (int n = 3; n <= 12; ++n) {
    const Graph c = build_graph(family::Cycle{n});
    EXPECT_EQ(radius(c), n / 2);
    EXPECT_EQ(diameter(c), n / 2);
  }
}

TEST(Properties, RadiusTwoCactiHaveShortCycles) {
  EnumerationFilter f;
  f.max_n = 9;
  f.graph_class = GraphClass::kCactus;
  f.radius = 2;
  for (const Graph& g : enumerate_graphs(f))
    for (const Block& b : block_decomposition(g).blocks)
      if (b.is_cycle()) {
        ASSERT_LE(b.order(), 5);
      }
}

TEST(Properties, TreeEdgeAndVertexCriticalityCoincide) {
  EnumerationFilter f;
  f.min_n = 2;
  f.max_n = 8;
  f.graph_class = GraphClass::kTree;
  for (const Graph& t : enumerate_graphs(f)) {
    ASSERT_EQ(is_edge_critical(t).critical, is_vertex_critical(t).critical) << emit_graph6(t);
  }
}

TEST(Properties, Graph6RoundTrip) {
  EnumerationFilter f;
  f.max_n = 6;
  f.connected = false;
  for (const Graph& g : enumerate_graphs(f)) {
    const std::string text = emit_graph6(g);
    ASSERT_EQ(parse_graph6(text), g);
    ASSERT_EQ(emit_graph6(parse_graph6(text)), text);
    const auto [n, edges] = oracle::reference_graph6(text);
    ASSERT_EQ(n, g.order());
    ASSERT_EQ(static_cast<int>(edges.size()), g.size());
  }
}

}  // namespace
}  // namespace packcrit
