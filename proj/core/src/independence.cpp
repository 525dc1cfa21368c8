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

#include "packcrit/independence.hpp"

#include <bit>
#include <string>

#include "packcrit/error.hpp"

namespace packcrit {

namespace {

constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

void require_exact_order(const Graph& graph) {
  if (graph.order() > kMaxExactOrder) {
    throw PreconditionError("exact independence solver supports at most " + std::to_string(kMaxExactOrder) +
                            " vertices");
  }
}

std::uint64_t all_vertices(int n) { return n == 64 ? ~std::uint64_t{0} : bit(n) - 1; }

// Branch and bound: vertices of degree <= 1 are taken greedily, otherwise
// branch on a maximum-degree vertex.
void search(std::span<const std::uint64_t> adj, std::uint64_t mask, int current, int& best) {
  while (true) {
    if (mask == 0) {
      if (current > best) best = current;
      return;
    }
    if (current + std::popcount(mask) <= best) return;
    Vertex pick = -1, low = -1;
    int pick_deg = -1;
    for (std::uint64_t m = mask; m; m &= m - 1) {
      const Vertex v = std::countr_zero(m);
      const int d = std::popcount(adj[v] & mask);
      if (d <= 1) {
        low = v;
        break;
      }
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }
    if (low != -1) {
      mask &= ~(adj[low] | bit(low));
      ++current;
      continue;
    }
    search(adj, mask & ~(adj[pick] | bit(pick)), current + 1, best);
    mask &= ~bit(pick);
  }
}

std::vector<Vertex> lex_least(std::span<const std::uint64_t> adj, std::uint64_t allowed, int alpha) {
  std::vector<Vertex> chosen;
  int need = alpha;
  for (std::uint64_t m = allowed; m && need > 0;) {
    const Vertex v = std::countr_zero(m);
    const std::uint64_t rest = allowed & ~(adj[v] | bit(v)) & ~(bit(v) | (bit(v) - 1));
    if (1 + independence_number(adj, rest) == need) {
      chosen.push_back(v);
      --need;
      allowed = rest;
    } else {
      allowed &= ~bit(v);
    }
    m = allowed;
  }
  return chosen;
}

}  // namespace

std::vector<std::uint64_t> adjacency_masks(const Graph& graph) {
  require_exact_order(graph);
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(graph.order()), 0);
  for (Vertex v = 0; v < graph.order(); ++v) {
    for (Vertex w : graph.neighbors(v)) adj[v] |= bit(w);
  }
  return adj;
}

int independence_number(std::span<const std::uint64_t> adjacency, std::uint64_t allowed) {
  int best = 0;
  search(adjacency, allowed, 0, best);
  return best;
}

int independence_number(const Graph& graph) {
  const auto adj = adjacency_masks(graph);
  return independence_number(adj, all_vertices(graph.order()));
}

MisResult max_independent_set(const Graph& graph) {
  const auto adj = adjacency_masks(graph);
  const std::uint64_t all = all_vertices(graph.order());
  MisResult out;
  out.alpha = independence_number(adj, all);
  out.witness = lex_least(adj, all, out.alpha);
  return out;
}

AlphaCriticality is_alpha_critical(const Graph& graph) {
  auto adj = adjacency_masks(graph);
  const std::uint64_t all = all_vertices(graph.order());
  const int alpha = independence_number(adj, all);
  for (const Edge& e : graph.edges()) {
    adj[e.u] &= ~bit(e.v);
    adj[e.v] &= ~bit(e.u);
    const int without = independence_number(adj, all);
    adj[e.u] |= bit(e.v);
    adj[e.v] |= bit(e.u);
    if (without == alpha) return {false, e};
  }
  return {true, std::nullopt};
}

bool haynes_check(const Graph& graph) {
  const auto adj = adjacency_masks(graph);
  const std::uint64_t all = all_vertices(graph.order());
  const int alpha = independence_number(adj, all);
  for (const Edge& e : graph.edges()) {
    // u in I and no other neighbour of v in I: everything in N[u] and N[v]
    // except u itself is excluded.
    const std::uint64_t rest = all & ~(adj[e.u] | adj[e.v] | bit(e.u) | bit(e.v));
    if (1 + independence_number(adj, rest) != alpha) return false;
  }
  return true;
}

std::optional<MisResult> mis_avoiding(const Graph& graph, std::span<const Vertex> forbidden) {
  const auto adj = adjacency_masks(graph);
  const std::uint64_t all = all_vertices(graph.order());
  std::uint64_t allowed = all;
  for (Vertex v : forbidden) {
    if (!graph.has_vertex(v)) throw GraphError("vertex " + std::to_string(v) + " not in graph");
    allowed &= ~bit(v);
  }
  const int alpha = independence_number(adj, all);
  if (independence_number(adj, allowed) != alpha) return std::nullopt;
  return MisResult{alpha, lex_least(adj, allowed, alpha)};
}

bool check_lemma_rad3(const Graph& graph) {
  const DistanceMatrix dist(graph);
  if (!dist.connected()) throw PreconditionError("lemma rad3 check needs a connected graph");
  if (radius(dist) < 3) throw PreconditionError("lemma rad3 check needs radius >= 3");
  if (!is_alpha_critical(graph).critical) throw PreconditionError("lemma rad3 check needs an alpha-critical graph");
  const auto adj = adjacency_masks(graph);
  const std::uint64_t all = all_vertices(graph.order());
  const int alpha = independence_number(adj, all);
  for (Vertex x = 0; x < graph.order(); ++x) {
    for (Vertex y = x + 1; y < graph.order(); ++y) {
      if (dist(x, y) != 3) continue;
      if (independence_number(adj, all & ~bit(x) & ~bit(y)) != alpha) return false;
    }
  }
  return true;
}

}  // namespace packcrit
