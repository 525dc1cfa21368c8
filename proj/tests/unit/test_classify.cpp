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

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "packcrit/classify.hpp"
#include "packcrit/criticality.hpp"
#include "packcrit/enumeration.hpp"
#include "packcrit/error.hpp"
#include "packcrit/families.hpp"

namespace packcrit {
namespace {

Graph spec(const char* text) { return build_graph(parse_family_spec(text)); }

Graph relabel(const Graph& g, std::mt19937& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Graph h(g.order());
  for (const Edge& e : g.edges()) h.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  return h;
}

TEST(Radius1, WheelSixFailsConnectedClause) {
  const Verdict v = classify_radius1(spec("W6"));
  EXPECT_TRUE(v.applicable);
  EXPECT_FALSE(v.predicted_critical);
  EXPECT_EQ(v.clause, "thm12-nomatch");
  EXPECT_EQ(v.universal_vertex, std::optional<Vertex>(5));
}

TEST(Radius1, WheelEightIsCritical) {
  const Verdict v = classify_radius1(spec("W8"));
  EXPECT_TRUE(v.predicted_critical);
  EXPECT_EQ(v.clause, "thm12-(i)");
  EXPECT_TRUE(is_edge_critical(spec("W8")).critical);
}

TEST(Radius1, HubOverTwoEdges) {
  const Graph g = add_universal_vertex(disjoint_union(spec("K2"), spec("K2")));
  const Verdict v = classify_radius1(g);
  EXPECT_TRUE(v.predicted_critical);
  EXPECT_EQ(v.clause, "thm12-(ii)");
  EXPECT_TRUE(is_edge_critical(g).critical);
}

TEST(Radius1, CompleteAndLeafCases) {
  EXPECT_EQ(classify_radius1(spec("K5")).clause, "obs-complete");
  const Verdict star = classify_radius1(spec("K1,3"));
  EXPECT_FALSE(star.predicted_critical);
  EXPECT_EQ(star.clause, "pro14");
  EXPECT_TRUE(star.leaf.has_value());
  EXPECT_THROW(classify_radius1(spec("C5")), PreconditionError);
}

TEST(Radius1, AlphaWitnessLiesInG) {
  // hub over P4: P4 is not alpha-critical
  const Graph g = add_universal_vertex(spec("P4"));
  const Verdict v = classify_radius1(g);
  EXPECT_FALSE(v.predicted_critical);
  ASSERT_TRUE(v.alpha_witness.has_value());
  EXPECT_TRUE(g.has_edge(v.alpha_witness->u, v.alpha_witness->v));
  EXPECT_NE(v.alpha_witness->v, 4);
}

TEST(Radius1, SeveralUniversalVerticesAgree) {
  // K2 joined to C5: two universal vertices
  Graph g = add_universal_vertex(add_universal_vertex(spec("C5")));
  const Verdict v = classify_radius1(g);
  EXPECT_EQ(v.predicted_critical, is_edge_critical(g).critical);
}

TEST(Rad2Diam2, OnlyFourAndFiveCycles) {
  const Verdict c5 = classify_cactus_rad2_diam2(spec("C5"));
  EXPECT_TRUE(c5.predicted_critical);
  EXPECT_EQ(c5.clause, "teo3");
  const Verdict c4 = classify_cactus_rad2_diam2(spec("C4"));
  EXPECT_FALSE(c4.predicted_critical);
  EXPECT_THROW(classify_cactus_rad2_diam2(spec("C6")), PreconditionError);
  EXPECT_THROW(classify_cactus_rad2_diam2(spec("K4")), PreconditionError);
}

TEST(Rad2Diam3, ClauseExamples) {
  EXPECT_EQ(classify_cactus_rad2_diam3(spec("P4")).clause, "teo4-(i)");
  EXPECT_EQ(classify_cactus_rad2_diam3(spec("G2^4(1,0;1,0)")).clause, "teo4-(iii)");
  EXPECT_EQ(classify_cactus_rad2_diam3(spec("H(2,0;0,1)")).clause, "teo4-(x)");
  const Verdict v = classify_cactus_rad2_diam3(spec("G1^5(1,2)"));
  EXPECT_FALSE(v.predicted_critical);
  EXPECT_EQ(v.clause, "teo4-nomatch");
  ASSERT_TRUE(v.family.has_value());
  EXPECT_EQ(to_string(*v.family), "G1^5(1,2)");
  EXPECT_THROW(classify_cactus_rad2_diam3(spec("C5")), PreconditionError);
}

TEST(Rad2Diam3, InvariantUnderRelabeling) {
  std::mt19937 rng(99);
  EnumerationFilter f;
  f.max_n = 9;
  f.graph_class = GraphClass::kCactus;
  f.radius = 2;
  f.diameter = 3;
  for (const Graph& g : enumerate_graphs(f)) {
    const Verdict base = classify_cactus_rad2_diam3(g);
    for (int k = 0; k < 3; ++k) {
      const Verdict moved = classify_cactus_rad2_diam3(relabel(g, rng));
      EXPECT_EQ(moved.predicted_critical, base.predicted_critical);
      EXPECT_EQ(moved.clause, base.clause);
    }
  }
}

TEST(BlockGraph, CentralBlockClauses) {
  const Verdict a = block_graph_diam3_criterion(spec("G3^3(1,0;1,0;1,0)"));
  EXPECT_EQ(a.clause, "lemma8-(a)");
  EXPECT_EQ(a.central_block.size(), 3u);
  EXPECT_EQ(block_graph_diam3_criterion(spec("G3^3(2,0;2,0;0,1)")).clause, "lemma8-(b)");
  const Verdict c = block_graph_diam3_criterion(spec("H(0,2;0,2)"));
  EXPECT_EQ(c.clause, "lemma8-(c)");
  ASSERT_EQ(c.subclauses.size(), 2u);
  EXPECT_EQ(c.subclauses[0].second, "c2");
  EXPECT_EQ(c.subclauses[1].second, "c2");
  const Verdict no = block_graph_diam3_criterion(spec("G3^3(1,0;1,0;0,1)"));
  EXPECT_FALSE(no.predicted_critical);
  EXPECT_THROW(block_graph_diam3_criterion(spec("C5")), PreconditionError);
}

TEST(BlockGraph, AgreesWithCactusRoute) {
  EnumerationFilter f;
  f.max_n = 9;
  f.graph_class = GraphClass::kCactus;
  f.radius = 2;
  f.diameter = 3;
  int compared = 0;
  for (const Graph& g : enumerate_graphs(f)) {
    if (!is_block_graph(g)) continue;
    ++compared;
    EXPECT_EQ(block_graph_diam3_criterion(g).predicted_critical, classify_cactus_rad2_diam3(g).predicted_critical);
  }
  EXPECT_GT(compared, 20);
}

TEST(Dispatch, PicksTheRightProcedure) {
  EXPECT_EQ(classify(spec("G3^3(1,0;1,0;1,0)"))->clause, "teo4-(v)");
  EXPECT_EQ(classify(spec("C5"))->theorem, "teo3");
  EXPECT_EQ(classify(spec("T3"))->theorem, "thm12");
  EXPECT_FALSE(classify(spec("C6")).has_value());
  EXPECT_FALSE(classify(Graph(1)).has_value());
  // a diameter-3 block graph that is not a cactus
  Graph k4_tail = spec("K4");
  Graph g(6);
  for (const Edge& e : k4_tail.edges()) g.add_edge(e.u, e.v);
  g.add_edge(0, 4);
  g.add_edge(1, 5);
  EXPECT_EQ(classify(g)->theorem, "lemma8");
}

}  // namespace
}  // namespace packcrit
