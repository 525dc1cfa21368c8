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

// Packing colourings: verification, the exact packing chromatic number, and
// the class-size counting bounds.

#pragma once

#include <optional>
#include <vector>

#include "packcrit/graph.hpp"

namespace packcrit {

/// colors[v] is the colour of v; colour i classes must be i-packings.
struct PackingColoring {
  std::vector<int> colors;

  /// Largest colour used (0 for the empty colouring).
  int k() const;
};

struct PackingViolation {
  int color = 0;
  Vertex u = 0;
  Vertex v = 0;
  int distance = 0;
};

struct PackingCheck {
  bool ok = true;
  std::optional<PackingViolation> violation;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks every colour class. A wrong-length array or a non-positive colour
/// throws GraphError; a packing violation is reported, not thrown.
PackingCheck verify_packing_coloring(const Graph& graph, const PackingColoring& coloring);

struct ChiRhoResult {
  int value = 0;
  PackingColoring witness;
};

/// Exact packing chromatic number with a witness colouring. Disconnected
/// graphs take the maximum over components (classes may span components).
ChiRhoResult chi_rho(const Graph& graph);

/// A packing colouring with at most k colours, if one exists.
std::optional<PackingColoring> find_packing_coloring(const Graph& graph, int k);

/// Size of a largest i-packing.
int max_i_packing(const Graph& graph, int i);

/// Smallest l with n <= sum_{i<min(l,d)} max_i_packing(G,i) + max(0, l-d+1),
/// d = diam(G). Connected graphs only.
int chi_rho_lower_bound(const Graph& graph);

/// n - alpha + 1 for a connected graph of diameter exactly two.
int diam2_formula(const Graph& graph);

}  // namespace packcrit
