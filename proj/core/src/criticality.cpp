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

#include "packcrit/criticality.hpp"

#include "packcrit/error.hpp"
#include "packcrit/packing.hpp"

namespace packcrit {

CriticalityReport is_edge_critical(const Graph& graph) {
  if (graph.order() == 0) throw PreconditionError("edge criticality of the empty graph");
  if (!isolated_vertices(graph).empty()) {
    throw PreconditionError("edge criticality is only equivalent to criticality without isolated vertices");
  }
  CriticalityReport report;
  report.base_chi_rho = chi_rho(graph).value;
  report.edges = graph.edges();
  report.critical = true;
  for (const Edge& e : report.edges) {
    const int value = chi_rho(delete_edge(graph, e)).value;
    report.deletion_values.push_back(value);
    if (value >= report.base_chi_rho && report.critical) {
      report.critical = false;
      report.witness_edge = e;
    }
  }
  return report;
}

CriticalityReport is_vertex_critical(const Graph& graph) {
  if (graph.order() < 2) throw PreconditionError("vertex criticality needs at least two vertices");
  CriticalityReport report;
  report.base_chi_rho = chi_rho(graph).value;
  report.critical = true;
  for (Vertex v = 0; v < graph.order(); ++v) {
    const int value = chi_rho(delete_vertex(graph, v).graph).value;
    report.deletion_values.push_back(value);
    if (value >= report.base_chi_rho && report.critical) {
      report.critical = false;
      report.witness_vertex = v;
    }
  }
  return report;
}

std::optional<Vertex> has_leaf_violation(const Graph& graph) {
  if (graph.order() < 3) throw PreconditionError("leaf filter needs at least three vertices");
  if (radius(graph) != 1) throw PreconditionError("leaf filter needs radius 1");
  const auto found = leaves(graph);
  if (found.empty()) return std::nullopt;
  return found.front();
}

}  // namespace packcrit
