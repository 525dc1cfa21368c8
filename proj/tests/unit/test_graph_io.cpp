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

#include "oracles.hpp"
#include "packcrit/error.hpp"
#include "packcrit/graph_io.hpp"

namespace packcrit {
namespace {

TEST(Graph6, DecodesKnownPath) {
  const Graph g = parse_graph6("DQc");
  EXPECT_EQ(g.order(), 5);
  const std::vector<Edge> want{Edge(0, 2), Edge(0, 4), Edge(1, 3), Edge(3, 4)};
  EXPECT_EQ(g.edges(), want);
}

TEST(Graph6, SmallCases) {
  EXPECT_EQ(parse_graph6("?").order(), 0);
  EXPECT_EQ(parse_graph6("@").order(), 1);
  EXPECT_EQ(parse_graph6("A_").size(), 1);
  EXPECT_EQ(parse_graph6("Bw").size(), 3);
  EXPECT_EQ(emit_graph6(Graph(0)), "?");
  EXPECT_EQ(emit_graph6(Graph::build(3, {{0, 1}, {0, 2}, {1, 2}})), "Bw");
}

TEST(Graph6, ToleratesTrailingNewline) {
  EXPECT_EQ(parse_graph6("DQc\n"), parse_graph6("DQc"));
  EXPECT_EQ(parse_graph6("DQc\r\n"), parse_graph6("DQc"));
}

TEST(Graph6, ErrorsCarryOffsets) {
  try {
    parse_graph6("DQ");
    FAIL() << "truncated input accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  try {
    parse_graph6("D Q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 1u);
  }
  EXPECT_THROW(parse_graph6("DQcc"), ParseError);  // trailing byte
  EXPECT_THROW(parse_graph6("A`"), ParseError);    // padding bit set
  EXPECT_THROW(parse_graph6(""), ParseError);
}

TEST(Graph6, LongFormHeaders) {
  Graph big(70);
  for (int v = 1; v < 70; ++v) big.add_edge(v - 1, v);
  const std::string text = emit_graph6(big);
  EXPECT_EQ(text[0], '~');
  EXPECT_EQ(parse_graph6(text), big);
  const auto ref = oracle::reference_graph6(text);
  EXPECT_EQ(ref.first, 70);
  EXPECT_EQ(ref.second.size(), 69u);

  // eight-byte header for n = 258048 with no body: truncation is reported
  // right after the header
  try {
    parse_graph6("~~???~??");
    FAIL() << "header without a body accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 8u);
  }
}

TEST(Graph6, AgreesWithReferenceDecoder) {
  for (const char* s : {"DQc", "Bw", "E?Bw", "GCQR@O", "I?h]@eOWG", "Fs\\zo"}) {
    const Graph g = parse_graph6(s);
    const auto [n, edges] = oracle::reference_graph6(s);
    ASSERT_EQ(g.order(), n) << s;
    ASSERT_EQ(static_cast<std::size_t>(g.size()), edges.size()) << s;
    for (const auto& [u, v] : edges) EXPECT_TRUE(g.has_edge(u, v)) << s;
    EXPECT_EQ(emit_graph6(g), s);
  }
}

TEST(EdgeList, RoundTrip) {
  const Graph g = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}});
  const std::string text = emit_edge_list(g);
  EXPECT_EQ(text, "n 4\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(parse_edge_list(text), g);
}

TEST(EdgeList, CommentsAndErrors) {
  const Graph g = parse_edge_list("# a triangle\nn 3\n\n0 1\n1 2 # inline\n0 2\n");
  EXPECT_EQ(g.size(), 3);
  try {
    parse_edge_list("n 3\n0 1\n0 x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(parse_edge_list("0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 2\n0 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 2\n1 1\n"), ParseError);
}

TEST(Dot, ColouredOutput) {
  const Graph g = Graph::build(2, {{0, 1}});
  const std::vector<int> colors{1, 2};
  const std::string dot = emit_dot(g, colors);
  EXPECT_NE(dot.find("graph G {"), std::string::npos);
  EXPECT_NE(dot.find("1 [label=\"1:2\"]"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1;"), std::string::npos);
}

}  // namespace
}  // namespace packcrit
