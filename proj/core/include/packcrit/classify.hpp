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

// Structural decision procedures for the known characterizations of packing
// chromatic critical graphs. None of these call the packing solver; the
// oracle comparison lives in the tests and the verify sweeps.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "packcrit/families.hpp"
#include "packcrit/graph.hpp"

namespace packcrit {

struct Verdict {
  /// Characterization applied: "thm12", "teo3", "teo4" or "lemma8".
  std::string theorem;
  bool applicable = false;
  bool predicted_critical = false;
  /// Matched condition, e.g. "thm12-(ii)", "teo4-(vii)", "teo4-nomatch".
  std::string clause;

  // Evidence, each item checkable on its own.
  std::optional<FamilySpec> family;
  std::optional<Vertex> universal_vertex;
  /// Edge of G whose removal keeps alpha of its part of G - u unchanged.
  std::optional<Edge> alpha_witness;
  std::optional<Vertex> leaf;
  /// Central block, and per central vertex the sub-clauses of (c) it meets.
  std::vector<Vertex> central_block;
  std::vector<std::pair<Vertex, std::string>> subclauses;
  std::vector<std::string> notes;
};

/// Radius-1 graphs. Complete graphs are critical; otherwise a leaf rules
/// criticality out, and the universal-vertex criterion decides the rest.
/// Throws PreconditionError unless rad(G) = 1, and TheoremViolation if two
/// universal vertices disagree.
Verdict classify_radius1(const Graph& graph);

/// Cacti of radius 2 and diameter 2 (only C4 and C5 exist).
Verdict classify_cactus_rad2_diam2(const Graph& graph);

/// Cacti of radius 2 and diameter 3, via family recognition.
Verdict classify_cactus_rad2_diam3(const Graph& graph);

/// Block graphs of diameter 3, via degree conditions on the central block.
Verdict block_graph_diam3_criterion(const Graph& graph);

/// Picks the first applicable procedure in the order above, or nullopt when
/// the graph is outside every characterized class.
std::optional<Verdict> classify(const Graph& graph);

}  // namespace packcrit
