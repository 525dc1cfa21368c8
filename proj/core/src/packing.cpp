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

#include "packcrit/packing.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "packcrit/error.hpp"
#include "packcrit/independence.hpp"

namespace packcrit {

int PackingColoring::k() const {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

PackingCheck verify_packing_coloring(const Graph& graph, const PackingColoring& coloring) {
  if (static_cast<int>(coloring.colors.size()) != graph.order()) {
    throw GraphError("colouring has " + std::to_string(coloring.colors.size()) + " entries for " +
                     std::to_string(graph.order()) + " vertices");
  }
  for (int c : coloring.colors) {
    if (c < 1) throw GraphError("colours must be positive, got " + std::to_string(c));
  }
  const DistanceMatrix dist(graph);
  for (Vertex u = 0; u < graph.order(); ++u) {
    for (Vertex v = u + 1; v < graph.order(); ++v) {
      const int c = coloring.colors[u];
      if (c != coloring.colors[v] || !dist.reachable(u, v)) continue;
      if (dist(u, v) <= c) return {false, PackingViolation{c, u, v, dist(u, v)}};
    }
  }
  return {};
}

namespace {

void require_solver_order(const Graph& graph) {
  if (graph.order() > kMaxExactOrder) {
    throw PreconditionError("exact packing solver supports at most " + std::to_string(kMaxExactOrder) +
                            " vertices");
  }
}

std::vector<std::uint64_t> power_masks(const DistanceMatrix& dist, int i) {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(dist.order()), 0);
  for (Vertex u = 0; u < dist.order(); ++u) {
    for (Vertex v = 0; v < dist.order(); ++v) {
      if (u != v && dist.reachable(u, v) && dist(u, v) <= i) adj[u] |= std::uint64_t{1} << v;
    }
  }
  return adj;
}

std::uint64_t all_vertices(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

int max_packing(const DistanceMatrix& dist, int i) {
  if (dist.order() == 0) return 0;
  const auto adj = power_masks(dist, i);
  return independence_number(adj, all_vertices(dist.order()));
}

// Largest i-packing sizes for i = 1 .. d-1 (index 0 unused).
std::vector<int> packing_capacities(const DistanceMatrix& dist, int diam) {
  std::vector<int> cap(static_cast<std::size_t>(std::max(diam, 1)), 0);
  for (int i = 1; i < diam; ++i) cap[i] = max_packing(dist, i);
  return cap;
}

int counting_bound(int n, int diam, const std::vector<int>& cap) {
  if (n <= 1) return n;
  for (int l = 1;; ++l) {
    long total = 0;
    for (int i = 1; i <= std::min(l, diam - 1); ++i) total += cap[i];
    total += std::max(0, l - diam + 1);
    if (total >= n) return l;
  }
}

// Depth-first search for a k-colouring of a connected graph. Colours
// 1..diam-1 may repeat; colours >= diam are singletons and interchangeable,
// so a vertex needing one always takes the smallest unused.
class KColoringSearch {
 public:
  KColoringSearch(const Graph& graph, const DistanceMatrix& dist, int diam, const std::vector<int>& cap, int k)
      : n_(graph.order()), dist_(dist), diam_(diam), cap_(cap), k_(k), small_(std::min(k, diam - 1)) {
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return graph.degree(a) > graph.degree(b); });
    colors_.assign(static_cast<std::size_t>(n_), 0);
    count_.assign(static_cast<std::size_t>(small_) + 1, 0);
    big_total_ = std::max(0, k - std::max(diam - 1, 0));
    full_small_ = small_ >= 1 ? ((std::uint64_t{1} << (small_ + 1)) - 2) : 0;
  }

  std::optional<PackingColoring> run() {
    std::vector<std::uint64_t> blocked(static_cast<std::size_t>(n_), 0);
    if (!extend(0, blocked, 0)) return std::nullopt;
    return PackingColoring{colors_};
  }

 private:
  bool bound_ok(std::size_t depth, const std::vector<std::uint64_t>& blocked, int big_used) const {
    const int big_left = big_total_ - big_used;
    const int remaining = n_ - static_cast<int>(depth);
    long capacity = big_left;
    for (int c = 1; c <= small_; ++c) capacity += std::max(0, cap_[c] - count_[c]);
    if (capacity < remaining) return false;
    int stuck = 0;
    for (std::size_t i = depth; i < order_.size(); ++i) {
      if ((blocked[order_[i]] & full_small_) == full_small_ && ++stuck > big_left) return false;
    }
    return true;
  }

  bool extend(std::size_t depth, const std::vector<std::uint64_t>& blocked, int big_used) {
    if (depth == order_.size()) return true;
    if (!bound_ok(depth, blocked, big_used)) return false;
    const Vertex v = order_[depth];
    for (int c = 1; c <= small_; ++c) {
      if (blocked[v] & (std::uint64_t{1} << c)) continue;
      std::vector<std::uint64_t> next = blocked;
      for (std::size_t i = depth + 1; i < order_.size(); ++i) {
        const Vertex w = order_[i];
        if (dist_(v, w) <= c) next[w] |= std::uint64_t{1} << c;
      }
      colors_[v] = c;
      ++count_[c];
      if (extend(depth + 1, next, big_used)) return true;
      --count_[c];
    }
    if (big_used < big_total_) {
      colors_[v] = std::max(diam_, 1) + big_used;
      if (extend(depth + 1, blocked, big_used + 1)) return true;
    }
    colors_[v] = 0;
    return false;
  }

  int n_;
  const DistanceMatrix& dist_;
  int diam_;
  const std::vector<int>& cap_;
  int k_;
  int small_;
  int big_total_ = 0;
  std::uint64_t full_small_ = 0;
  std::vector<Vertex> order_;
  std::vector<int> colors_;
  std::vector<int> count_;
};

// Colour 1 on a maximum independent set, distinct colours elsewhere.
PackingColoring independence_coloring(const Graph& graph) {
  const auto mis = max_independent_set(graph);
  PackingColoring out{std::vector<int>(static_cast<std::size_t>(graph.order()), 0)};
  for (Vertex v : mis.witness) out.colors[v] = 1;
  int next = 2;
  for (int& c : out.colors) {
    if (c == 0) c = next++;
  }
  return out;
}

ChiRhoResult chi_rho_connected(const Graph& graph) {
  const int n = graph.order();
  if (n == 1) return {1, PackingColoring{{1}}};
  const DistanceMatrix dist(graph);
  const int diam = diameter(dist);
  const auto cap = packing_capacities(dist, diam);
  const int lower = counting_bound(n, diam, cap);
  PackingColoring fallback = independence_coloring(graph);
  const int upper = fallback.k();
  for (int k = lower; k < upper; ++k) {
    if (auto found = KColoringSearch(graph, dist, diam, cap, k).run()) {
      const int used = found->k();
      return {used, *std::move(found)};
    }
  }
  return {upper, std::move(fallback)};
}

}  // namespace

ChiRhoResult chi_rho(const Graph& graph) {
  if (graph.order() == 0) throw PreconditionError("packing chromatic number of the empty graph");
  require_solver_order(graph);
  ChiRhoResult out{0, PackingColoring{std::vector<int>(static_cast<std::size_t>(graph.order()), 0)}};
  for (const auto& comp : components(graph)) {
    const auto sub = induced_subgraph(graph, comp);
    const auto part = chi_rho_connected(sub.graph);
    out.value = std::max(out.value, part.value);
    for (std::size_t i = 0; i < sub.original.size(); ++i) out.witness.colors[sub.original[i]] = part.witness.colors[i];
  }
  return out;
}

std::optional<PackingColoring> find_packing_coloring(const Graph& graph, int k) {
  if (graph.order() == 0) throw PreconditionError("packing colouring of the empty graph");
  require_solver_order(graph);
  if (k < 1) return std::nullopt;
  PackingColoring out{std::vector<int>(static_cast<std::size_t>(graph.order()), 0)};
  for (const auto& comp : components(graph)) {
    const auto sub = induced_subgraph(graph, comp);
    std::optional<PackingColoring> part;
    if (sub.graph.order() == 1) {
      part = PackingColoring{{1}};
    } else {
      const DistanceMatrix dist(sub.graph);
      const int diam = diameter(dist);
      const auto cap = packing_capacities(dist, diam);
      part = KColoringSearch(sub.graph, dist, diam, cap, k).run();
    }
    if (!part) return std::nullopt;
    for (std::size_t i = 0; i < sub.original.size(); ++i) out.colors[sub.original[i]] = part->colors[i];
  }
  return out;
}

int max_i_packing(const Graph& graph, int i) {
  if (i < 1) throw GraphError("packing index must be positive");
  require_solver_order(graph);
  return max_packing(DistanceMatrix(graph), i);
}

int chi_rho_lower_bound(const Graph& graph) {
  require_solver_order(graph);
  const DistanceMatrix dist(graph);
  const int diam = diameter(dist);  // throws on empty or disconnected input
  return counting_bound(graph.order(), diam, packing_capacities(dist, diam));
}

int diam2_formula(const Graph& graph) {
  const DistanceMatrix dist(graph);
  if (diameter(dist) != 2) throw PreconditionError("diameter-two formula needs diameter exactly 2");
  return graph.order() - independence_number(graph) + 1;
}

}  // namespace packcrit
