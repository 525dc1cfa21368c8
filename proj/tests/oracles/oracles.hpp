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

// Slow, obviously-correct reference implementations used only by tests.
// Nothing here calls into the library's algorithms; graphs are read through
// their adjacency alone.

#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "packcrit/graph.hpp"

namespace packcrit::oracle {

/// All-pairs distances by Floyd-Warshall; -1 for unreachable pairs.
std::vector<std::vector<int>> floyd(const Graph& g);

/// Independence number by scanning every vertex subset (n <= 20).
int brute_alpha(const Graph& g);

/// Packing chromatic number by dynamic programming over (colour, remaining
/// vertex set): the least k such that colours 1..k can be peeled off as
/// i-packings. Practical up to about 14 vertices.
int brute_chi_rho(const Graph& g);

/// Critical in the edge sense, using brute_chi_rho for every deletion.
bool brute_edge_critical(const Graph& g);

/// Decodes graph6 bit by bit, straight from the format description.
/// Returns the order and the edge list in file order.
std::pair<int, std::vector<std::pair<int, int>>> reference_graph6(std::string_view text);

/// Adjacency bit string minimised over all vertex permutations (n <= 7).
std::string canonical_form(const Graph& g);

/// Canonical forms of all labeled graphs on n vertices (n <= 6) accepted by
/// `keep`, so the set size is the number of isomorphism classes.
std::set<std::string> labeled_classes(int n, const std::function<bool(const Graph&)>& keep);

/// Naive predicates written from the definitions.
bool connected(const Graph& g);
/// Connected, and every edge uv has at most one u-v path avoiding it, i.e.
/// lies on at most one cycle. Counts simple paths, so small graphs only.
bool cactus(const Graph& g);

}  // namespace packcrit::oracle
