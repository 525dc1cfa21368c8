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

// Packing-chromatic criticality under single edge or vertex deletions.

#pragma once

#include <optional>
#include <vector>

#include "packcrit/graph.hpp"

namespace packcrit {

struct CriticalityReport {
  int base_chi_rho = 0;
  bool critical = false;
  /// Edge mode: edges in Graph::edges() order with chi_rho(G - e) alongside.
  std::vector<Edge> edges;
  /// Vertex mode: vertex v at index v.
  std::vector<int> deletion_values;
  std::optional<Edge> witness_edge;
  std::optional<Vertex> witness_vertex;
};

/// chi_rho(G - e) < chi_rho(G) for every edge. For graphs without isolated
/// vertices this is the same as chi_rho-criticality; graphs that have one
/// (including K1) throw PreconditionError.
CriticalityReport is_edge_critical(const Graph& graph);

/// chi_rho(G - v) < chi_rho(G) for every vertex; needs at least 2 vertices.
CriticalityReport is_vertex_critical(const Graph& graph);

/// First leaf of a radius-1 graph on >= 3 vertices, if any. Such a graph
/// with a leaf is never critical.
std::optional<Vertex> has_leaf_violation(const Graph& graph);

}  // namespace packcrit
