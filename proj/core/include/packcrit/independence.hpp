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

// Exact maximum independent sets and alpha-criticality.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "packcrit/graph.hpp"

namespace packcrit {

/// Largest order accepted by the exact solvers in this header.
inline constexpr int kMaxExactOrder = 64;

struct MisResult {
  int alpha = 0;
  std::vector<Vertex> witness;  // sorted; lexicographically least maximum independent set
};

MisResult max_independent_set(const Graph& graph);
int independence_number(const Graph& graph);

/// alpha of the subgraph induced by `allowed` (bit v set = vertex v kept).
/// Adjacency is given as one neighbour mask per vertex.
int independence_number(std::span<const std::uint64_t> adjacency, std::uint64_t allowed);

std::vector<std::uint64_t> adjacency_masks(const Graph& graph);

struct AlphaCriticality {
  bool critical = true;
  /// An edge whose removal leaves alpha unchanged, when not critical.
  std::optional<Edge> witness;
};

/// alpha(G - e) > alpha(G) for every edge. Edgeless graphs are vacuously
/// alpha-critical.
AlphaCriticality is_alpha_critical(const Graph& graph);

/// For every edge uv some maximum independent set contains one endpoint as
/// the only neighbour of the other endpoint in the set. Equivalent to
/// alpha-criticality; computed without deleting edges.
bool haynes_check(const Graph& graph);

/// A maximum independent set of G disjoint from `forbidden`, if one exists.
std::optional<MisResult> mis_avoiding(const Graph& graph, std::span<const Vertex> forbidden);

/// For alpha-critical G with rad(G) >= 3: every pair at distance exactly 3 is
/// avoided by some maximum independent set. Throws PreconditionError when G
/// is not connected, not alpha-critical, or has radius below 3.
bool check_lemma_rad3(const Graph& graph);

}  // namespace packcrit
