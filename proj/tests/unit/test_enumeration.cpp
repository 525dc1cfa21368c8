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

#include <set>

#include "frozen.hpp"
#include "oracles.hpp"
#include "packcrit/enumeration.hpp"
#include "packcrit/error.hpp"
#include "packcrit/graph_io.hpp"

namespace packcrit {
namespace {

EnumerationFilter exactly(int n, GraphClass c = GraphClass::kAll, bool connected = true) {
  EnumerationFilter f;
  f.min_n = f.max_n = n;
  f.graph_class = c;
  f.connected = connected;
  return f;
}

std::set<std::string> forms(const std::vector<Graph>& graphs) {
  std::set<std::string> out;
  for (const Graph& g : graphs) out.insert(oracle::canonical_form(g));
  return out;
}

TEST(Enumerate, SpotCounts) {
  EXPECT_EQ(enumerate_graphs(exactly(4)).size(), 6u);
  EXPECT_EQ(enumerate_graphs(exactly(5)).size(), 21u);
  EXPECT_EQ(enumerate_graphs(exactly(5, GraphClass::kTree)).size(), 3u);
  EXPECT_EQ(enumerate_cacti(exactly(3)).size(), 2u);
}

TEST(Enumerate, MatchesLabeledBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    const auto conn = oracle::labeled_classes(n, [](const Graph& g) { return oracle::connected(g); });
    EXPECT_EQ(forms(enumerate_graphs(exactly(n))), conn) << n;
    const auto all = oracle::labeled_classes(n, [](const Graph&) { return true; });
    EXPECT_EQ(forms(enumerate_graphs(exactly(n, GraphClass::kAll, false))), all) << n;
    const auto cacti = oracle::labeled_classes(n, [](const Graph& g) { return oracle::cactus(g); });
    EXPECT_EQ(forms(enumerate_cacti(exactly(n))), cacti) << n;
    const auto trees =
        oracle::labeled_classes(n, [](const Graph& g) { return oracle::connected(g) && g.size() == g.order() - 1; });
    EXPECT_EQ(forms(enumerate_graphs(exactly(n, GraphClass::kTree))), trees) << n;
  }
}

TEST(Enumerate, FrozenCounts) {
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(enumerate_graphs(exactly(n)).size(), static_cast<std::size_t>(frozen::kConnectedGraphs[n - 1])) << n;
    EXPECT_EQ(enumerate_graphs(exactly(n, GraphClass::kAll, false)).size(), static_cast<std::size_t>(frozen::kAllGraphs[n - 1]))
        << n;
  }
  for (int n = 1; n <= 9; ++n) {
    EXPECT_EQ(enumerate_cacti(exactly(n)).size(), static_cast<std::size_t>(frozen::kCacti[n - 1])) << n;
    EXPECT_EQ(enumerate_graphs(exactly(n, GraphClass::kTree)).size(), static_cast<std::size_t>(frozen::kTrees[n - 1])) << n;
  }
}

TEST(Enumerate, CactiAgreeWithFilteredGeneralGraphs) {
  for (int n = 1; n <= 7; ++n) {
    std::vector<Graph> filtered;
    for (const Graph& g : enumerate_graphs(exactly(n)))
      if (is_cactus(g)) filtered.push_back(g);
    EXPECT_EQ(forms(filtered), forms(enumerate_cacti(exactly(n)))) << n;
  }
}

TEST(Enumerate, MetricFilters) {
  EnumerationFilter f;
  f.max_n = 5;
  f.graph_class = GraphClass::kCactus;
  f.radius = 2;
  f.diameter = 2;
  std::vector<std::string> names;
  for (const Graph& g : enumerate_graphs(f)) names.push_back(emit_graph6(g));
  EXPECT_EQ(names.size(), 2u);  // C4 and C5
  EnumerationFilter t = exactly(4, GraphClass::kTree);
  t.radius = 2;
  t.diameter = 3;
  const auto p4 = enumerate_graphs(t);
  ASSERT_EQ(p4.size(), 1u);
  EXPECT_EQ(p4[0].size(), 3);
}

TEST(Enumerate, DeterministicOrder) {
  EnumerationFilter f;
  f.max_n = 6;
  const auto a = enumerate_graphs(f);
  const auto b = enumerate_graphs(f);
  EXPECT_EQ(a, b);
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_LE(a[i - 1].order(), a[i].order());
}

TEST(Enumerate, CapsAndBadFilters) {
  EXPECT_THROW(enumerate_graphs(exactly(9)), PreconditionError);
  EXPECT_THROW(enumerate_cacti(exactly(12)), PreconditionError);
  EnumerationFilter f = exactly(6);
  f.cap = 5;
  EXPECT_THROW(enumerate_graphs(f), PreconditionError);
  EnumerationFilter bad;
  bad.min_n = 4;
  bad.max_n = 3;
  EXPECT_THROW(enumerate_graphs(bad), PreconditionError);
}

TEST(Corpus, FilterAndDeduplicate) {
  const Graph p5 = parse_graph6("DQc");
  const Graph p5_again = Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const Graph star = Graph::build(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const std::vector<Graph> corpus{p5, p5_again, star, Graph(2)};
  EnumerationFilter f;
  f.max_n = 5;
  const auto kept = filter_corpus(corpus, f);
  // the two labelings of P5 collapse; the edgeless pair is disconnected
  EXPECT_EQ(kept.size(), 2u);
}

}  // namespace
}  // namespace packcrit
