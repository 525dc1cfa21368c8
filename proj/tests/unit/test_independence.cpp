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

#include <random>

#include "oracles.hpp"
#include "packcrit/error.hpp"
#include "packcrit/families.hpp"
#include "packcrit/independence.hpp"

namespace packcrit {
namespace {

Graph spec(const char* text) { return build_graph(parse_family_spec(text)); }

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

bool independent(const Graph& g, const std::vector<Vertex>& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (g.has_edge(set[i], set[j])) return false;
  return true;
}

TEST(Alpha, KnownValues) {
  EXPECT_EQ(independence_number(spec("C5")), 2);
  EXPECT_EQ(independence_number(spec("C7")), 3);
  EXPECT_EQ(independence_number(spec("K6")), 1);
  EXPECT_EQ(independence_number(spec("K1,7")), 7);
  EXPECT_EQ(independence_number(spec("P5")), 3);
  EXPECT_EQ(independence_number(Graph(4)), 4);
  EXPECT_EQ(independence_number(Graph()), 0);
}

TEST(Alpha, WitnessIsLexicographicallyLeast) {
  const auto mis = max_independent_set(spec("C6"));
  EXPECT_EQ(mis.alpha, 3);
  EXPECT_EQ(mis.witness, (std::vector<Vertex>{0, 2, 4}));
}

TEST(Alpha, MatchesBruteForceOnRandomGraphs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + trial % 14;
    const Graph g = random_graph(n, 0.15 + 0.05 * (trial % 12), rng);
    const auto mis = max_independent_set(g);
    ASSERT_EQ(mis.alpha, oracle::brute_alpha(g)) << trial;
    ASSERT_EQ(static_cast<int>(mis.witness.size()), mis.alpha);
    ASSERT_TRUE(independent(g, mis.witness));
  }
}

TEST(Alpha, SizeCap) {
  EXPECT_THROW(independence_number(Graph(kMaxExactOrder + 1)), PreconditionError);
  Graph big(kMaxExactOrder);
  for (int v = 1; v < kMaxExactOrder; ++v) big.add_edge(v - 1, v);
  EXPECT_EQ(independence_number(big), kMaxExactOrder / 2);
}

TEST(AlphaCritical, OddCyclesAndCompleteGraphs) {
  EXPECT_TRUE(is_alpha_critical(spec("C5")).critical);
  EXPECT_TRUE(is_alpha_critical(spec("C9")).critical);
  EXPECT_TRUE(is_alpha_critical(spec("K4")).critical);
  const auto c6 = is_alpha_critical(spec("C6"));
  EXPECT_FALSE(c6.critical);
  ASSERT_TRUE(c6.witness.has_value());
  EXPECT_EQ(independence_number(delete_edge(spec("C6"), *c6.witness)), 3);
  EXPECT_FALSE(is_alpha_critical(spec("P4")).critical);
  EXPECT_TRUE(is_alpha_critical(Graph(3)).critical);  // no edges to test
}

TEST(AlphaCritical, HaynesAgreesWithDefinition) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = random_graph(2 + trial % 8, 0.5, rng);
    EXPECT_EQ(haynes_check(g), is_alpha_critical(g).critical) << trial;
  }
}

TEST(MisAvoiding, ForbiddenVertices) {
  const Graph c5 = spec("C5");
  const std::vector<Vertex> forbid{0};
  const auto mis = mis_avoiding(c5, forbid);
  ASSERT_TRUE(mis.has_value());
  EXPECT_EQ(mis->alpha, 2);
  EXPECT_TRUE(std::find(mis->witness.begin(), mis->witness.end(), 0) == mis->witness.end());
  const std::vector<Vertex> star_center{0};
  EXPECT_FALSE(mis_avoiding(spec("K1,3"), std::vector<Vertex>{1, 2, 3}).has_value());
  EXPECT_TRUE(mis_avoiding(spec("K1,3"), star_center).has_value());
}

TEST(LemmaRad3, OddCycles) {
  for (const char* c : {"C7", "C9", "C11"}) EXPECT_TRUE(check_lemma_rad3(spec(c))) << c;
  EXPECT_THROW(check_lemma_rad3(spec("C5")), PreconditionError);  // radius 2
  EXPECT_THROW(check_lemma_rad3(spec("C8")), PreconditionError);  // not alpha-critical
}

}  // namespace
}  // namespace packcrit
