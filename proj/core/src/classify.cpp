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

#include "packcrit/classify.hpp"

#include <algorithm>

#include "packcrit/error.hpp"
#include "packcrit/independence.hpp"

namespace packcrit {
namespace {

struct Thm12Outcome {
  bool critical = false;
  std::string clause;
  std::optional<Edge> alpha_witness;
};

// The universal-vertex criterion for one choice of hub u.
Thm12Outcome universal_criterion(const Graph& g, Vertex u) {
  const Relabeled rest = delete_vertex(g, u);
  const auto parts = components(rest.graph);
  Thm12Outcome out;
  const auto lift = [&](const std::vector<Vertex>& local, Edge e) {
    return Edge(rest.original[static_cast<std::size_t>(local[static_cast<std::size_t>(e.u)])],
                rest.original[static_cast<std::size_t>(local[static_cast<std::size_t>(e.v)])]);
  };
  if (parts.size() == 1) {
    out.clause = "thm12-(i)";
    const auto ac = is_alpha_critical(rest.graph);
    if (!ac.critical) out.alpha_witness = lift(parts.front(), *ac.witness);
    out.critical = ac.critical && radius(rest.graph) >= 3;
    return out;
  }
  out.clause = "thm12-(ii)";
  out.critical = true;
  for (const auto& comp : parts) {
    const Relabeled part = induced_subgraph(rest.graph, comp);
    const auto ac = is_alpha_critical(part.graph);
    if (!ac.critical) {
      out.critical = false;
      out.alpha_witness = lift(part.original, *ac.witness);
      break;
    }
  }
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ',';
    out += p;
  }
  return out;
}

}  // namespace

Verdict classify_radius1(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw PreconditionError("radius-1 classification needs a connected graph");
  const DistanceMatrix dist(g);
  if (radius(dist) != 1) throw PreconditionError("radius-1 classification needs rad(G) = 1");
  Verdict v;
  v.theorem = "thm12";
  v.applicable = true;
  const auto hubs = universal_vertices(g);
  v.universal_vertex = hubs.front();
  if (diameter(dist) == 1) {
    v.predicted_critical = true;
    v.clause = "obs-complete";
    return v;
  }
  if (const auto found = leaves(g); !found.empty()) {
    v.predicted_critical = false;
    v.clause = "pro14";
    v.leaf = found.front();
    return v;
  }
  const Thm12Outcome first = universal_criterion(g, hubs.front());
  for (std::size_t i = 1; i < hubs.size(); ++i) {
    const Thm12Outcome other = universal_criterion(g, hubs[i]);
    if (other.critical != first.critical) {
      throw TheoremViolation("universal vertices " + std::to_string(hubs.front()) + " and " + std::to_string(hubs[i]) +
                             " give different verdicts");
    }
  }
  if (hubs.size() > 1) v.notes.push_back(std::to_string(hubs.size()) + " universal vertices agree");
  v.predicted_critical = first.critical;
  v.clause = first.critical ? first.clause : "thm12-nomatch";
  v.alpha_witness = first.alpha_witness;
  return v;
}

Verdict classify_cactus_rad2_diam2(const Graph& g) {
  if (g.order() == 0 || !is_connected(g) || !is_cactus(g)) throw PreconditionError("expected a connected cactus");
  const DistanceMatrix dist(g);
  if (radius(dist) != 2 || diameter(dist) != 2) throw PreconditionError("expected radius 2 and diameter 2");
  bool two_regular = true;
  for (Vertex x = 0; x < g.order(); ++x) two_regular = two_regular && g.degree(x) == 2;
  Verdict v;
  v.theorem = "teo3";
  v.applicable = true;
  if (two_regular && g.order() == 5) {
    v.predicted_critical = true;
    v.clause = "teo3";
    v.family = family::Cycle{5};
  } else if (two_regular && g.order() == 4) {
    v.predicted_critical = false;
    v.clause = "teo3-nomatch";
    v.family = family::Cycle{4};
  } else {
    throw TheoremViolation("radius-2 diameter-2 cactus that is neither C4 nor C5");
  }
  return v;
}

Verdict classify_cactus_rad2_diam3(const Graph& g) {
  if (g.order() == 0 || !is_connected(g) || !is_cactus(g)) throw PreconditionError("expected a connected cactus");
  const DistanceMatrix dist(g);
  if (radius(dist) != 2 || diameter(dist) != 3) throw PreconditionError("expected radius 2 and diameter 3");
  Verdict v;
  v.theorem = "teo4";
  v.applicable = true;
  v.clause = "teo4-nomatch";
  const auto specs = recognize_all(g);
  if (!specs.empty()) v.family = specs.front();
  for (const auto& spec : specs) {
    if (const auto clause = rad2_diam3_clause(spec)) {
      v.predicted_critical = true;
      v.clause = "teo4-" + *clause;
      v.family = spec;
      break;
    }
  }
  return v;
}

Verdict block_graph_diam3_criterion(const Graph& g) {
  if (g.order() == 0 || !is_connected(g) || !is_block_graph(g)) throw PreconditionError("expected a connected block graph");
  const DistanceMatrix dist(g);
  if (diameter(dist) != 3) throw PreconditionError("expected diameter 3");
  const auto middle = center(dist);
  const auto bd = block_decomposition(g);
  const auto central = std::find_if(bd.blocks.begin(), bd.blocks.end(), [&](const Block& b) { return b.vertices == middle; });
  if (central == bd.blocks.end()) throw TheoremViolation("the center of a diameter-3 block graph is not a block");
  const int b = central->order();
  const auto central_index = static_cast<int>(central - bd.blocks.begin());

  Verdict v;
  v.theorem = "lemma8";
  v.applicable = true;
  v.central_block = middle;

  bool all_deg_b = true;
  bool all_deg_b1 = true;
  int two_leaf_count = 0;
  bool every_c = true;
  bool some_c12 = false;
  for (Vertex x : middle) {
    const int deg = g.degree(x);
    int leaf_nbrs = 0;
    for (Vertex w : g.neighbors(x)) leaf_nbrs += g.degree(w) == 1;
    int order3 = 0;
    bool order4 = false;
    for (int bi : bd.blocks_of[static_cast<std::size_t>(x)]) {
      if (bi == central_index) continue;
      const int k = bd.blocks[static_cast<std::size_t>(bi)].order();
      order3 += k == 3;
      order4 = order4 || k >= 4;
    }
    all_deg_b = all_deg_b && deg == b;
    all_deg_b1 = all_deg_b1 && deg == b + 1;
    two_leaf_count += leaf_nbrs == 2;
    std::vector<std::string> met;
    if (order4 && leaf_nbrs == 0) met.emplace_back("c1");
    if (order3 >= 2 && leaf_nbrs == 0) met.emplace_back("c2");
    some_c12 = some_c12 || !met.empty();
    if (deg == b + 1 && leaf_nbrs == 2) met.emplace_back("c3");
    every_c = every_c && !met.empty();
    v.subclauses.emplace_back(x, met.empty() ? "-" : join(met));
  }
  if (all_deg_b) {
    v.predicted_critical = true;
    v.clause = "lemma8-(a)";
  } else if (all_deg_b1 && two_leaf_count == b - 1) {
    v.predicted_critical = true;
    v.clause = "lemma8-(b)";
  } else if (every_c && some_c12) {
    v.predicted_critical = true;
    v.clause = "lemma8-(c)";
  } else {
    v.predicted_critical = false;
    v.clause = "lemma8-nomatch";
  }
  return v;
}

std::optional<Verdict> classify(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return std::nullopt;
  const DistanceMatrix dist(g);
  const int rad = radius(dist);
  const int diam = diameter(dist);
  if (rad == 1) return classify_radius1(g);
  const bool cactus = is_cactus(g);
  if (cactus && rad == 2 && diam == 2) return classify_cactus_rad2_diam2(g);
  if (cactus && rad == 2 && diam == 3) return classify_cactus_rad2_diam3(g);
  if (diam == 3 && is_block_graph(g)) return block_graph_diam3_criterion(g);
  return std::nullopt;
}

}  // namespace packcrit
