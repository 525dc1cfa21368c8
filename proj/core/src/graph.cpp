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

#include "packcrit/graph.hpp"

#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

#include "packcrit/error.hpp"

namespace packcrit {

namespace {

std::string pair_text(Vertex u, Vertex v) {
  std::ostringstream out;
  out << "(" << u << "," << v << ")";
  return out.str();
}

}  // namespace

Graph::Graph(int order) {
  if (order < 0) throw GraphError("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(order));
}

Graph Graph::build(int order, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(order);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::build(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return build(order, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

Graph Graph::build(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (const auto& e : edges) g.add_edge(e.u, e.v);
  return g;
}

bool Graph::add_edge(Vertex u, Vertex v) {
  if (!has_vertex(u) || !has_vertex(v)) {
    throw GraphError("edge " + pair_text(u, v) + " has an endpoint outside [0, " +
                     std::to_string(order()) + ")");
  }
  if (u == v) throw GraphError("self-loop " + pair_text(u, v));
  auto& nu = adjacency_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return false;
  nu.insert(it, v);
  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
  return true;
}

void Graph::check_vertex(Vertex v) const {
  if (!has_vertex(v)) {
    throw GraphError("vertex " + std::to_string(v) + " not in graph of order " +
                     std::to_string(order()));
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Distances

DistanceMatrix::DistanceMatrix(const Graph& graph)
    : n_(graph.order()), d_(static_cast<std::size_t>(n_) * n_, kUnreachable) {
  std::vector<Vertex> queue(static_cast<std::size_t>(n_));
  for (Vertex s = 0; s < n_; ++s) {
    int* row = d_.data() + static_cast<std::size_t>(s) * n_;
    row[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const Vertex x = queue[head++];
      for (Vertex y : graph.neighbors(x)) {
        if (row[y] == kUnreachable) {
          row[y] = row[x] + 1;
          queue[tail++] = y;
        }
      }
    }
  }
}

bool DistanceMatrix::connected() const noexcept {
  if (n_ == 0) return false;
  return std::none_of(d_.begin(), d_.end(), [](int x) { return x == kUnreachable; });
}

namespace {

void require_metric_domain(const DistanceMatrix& dist) {
  if (dist.order() == 0) throw PreconditionError("metric query on the empty graph");
  if (!dist.connected()) throw PreconditionError("metric query on a disconnected graph");
}

}  // namespace

int eccentricity(const DistanceMatrix& dist, Vertex u) {
  require_metric_domain(dist);
  if (u < 0 || u >= dist.order()) throw GraphError("vertex " + std::to_string(u) + " out of range");
  int ecc = 0;
  for (Vertex v = 0; v < dist.order(); ++v) ecc = std::max(ecc, dist(u, v));
  return ecc;
}

int eccentricity(const Graph& graph, Vertex u) { return eccentricity(DistanceMatrix(graph), u); }

int radius(const DistanceMatrix& dist) {
  require_metric_domain(dist);
  int best = dist.order();
  for (Vertex u = 0; u < dist.order(); ++u) best = std::min(best, eccentricity(dist, u));
  return best;
}

int radius(const Graph& graph) { return radius(DistanceMatrix(graph)); }

int diameter(const DistanceMatrix& dist) {
  require_metric_domain(dist);
  int best = 0;
  for (Vertex u = 0; u < dist.order(); ++u) best = std::max(best, eccentricity(dist, u));
  return best;
}

int diameter(const Graph& graph) { return diameter(DistanceMatrix(graph)); }

std::vector<Vertex> center(const DistanceMatrix& dist) {
  const int rad = radius(dist);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < dist.order(); ++u) {
    if (eccentricity(dist, u) == rad) out.push_back(u);
  }
  return out;
}

std::vector<Vertex> center(const Graph& graph) { return center(DistanceMatrix(graph)); }

// ---------------------------------------------------------------------------
// Deletions and constructions

Graph delete_edge(const Graph& graph, Edge e) {
  if (!graph.has_vertex(e.u) || !graph.has_vertex(e.v) || !graph.has_edge(e.u, e.v)) {
    throw GraphError("edge " + pair_text(e.u, e.v) + " not in graph");
  }
  Graph out(graph.order());
  for (const Edge& f : graph.edges()) {
    if (f != e) out.add_edge(f.u, f.v);
  }
  return out;
}

Relabeled induced_subgraph(const Graph& graph, std::span<const Vertex> vertices) {
  std::vector<Vertex> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
    throw GraphError("duplicate vertex in induced subgraph request");
  }
  std::vector<Vertex> index(static_cast<std::size_t>(graph.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!graph.has_vertex(keep[i])) throw GraphError("vertex " + std::to_string(keep[i]) + " not in graph");
    index[keep[i]] = static_cast<Vertex>(i);
  }
  Relabeled out{Graph(static_cast<int>(keep.size())), keep};
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : graph.neighbors(keep[i])) {
      if (index[w] > static_cast<Vertex>(i)) out.graph.add_edge(static_cast<Vertex>(i), index[w]);
    }
  }
  return out;
}

Relabeled delete_vertex(const Graph& graph, Vertex v) {
  if (!graph.has_vertex(v)) throw GraphError("vertex " + std::to_string(v) + " not in graph");
  std::vector<Vertex> keep;
  keep.reserve(static_cast<std::size_t>(graph.order() - 1));
  for (Vertex u = 0; u < graph.order(); ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced_subgraph(graph, keep);
}

Graph add_universal_vertex(const Graph& graph) {
  Graph out(graph.order() + 1);
  for (const Edge& e : graph.edges()) out.add_edge(e.u, e.v);
  for (Vertex u = 0; u < graph.order(); ++u) out.add_edge(u, graph.order());
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) out.add_edge(e.u + a.order(), e.v + a.order());
  return out;
}

// ---------------------------------------------------------------------------
// Connectivity and blocks

std::vector<std::vector<Vertex>> components(const Graph& graph) {
  const int n = graph.order();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::deque<Vertex> queue{s};
    comp[s] = id;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      out.back().push_back(x);
      for (Vertex y : graph.neighbors(x)) {
        if (comp[y] == -1) {
          comp[y] = id;
          queue.push_back(y);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Graph& graph) { return components(graph).size() == 1; }

namespace {

// Hopcroft-Tarjan over every component; reports articulation points, bridges
// and the edge sets of the biconnected components.
struct LowLink {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<bool> is_cut;
  std::vector<Edge> bridge_list;
  std::vector<std::vector<Edge>> block_edges;
  std::vector<Edge> stack;
  int timer = 0;

  explicit LowLink(const Graph& graph)
      : g(graph),
        disc(static_cast<std::size_t>(graph.order()), -1),
        low(static_cast<std::size_t>(graph.order()), 0),
        is_cut(static_cast<std::size_t>(graph.order()), false) {
    for (Vertex s = 0; s < g.order(); ++s) {
      if (disc[s] == -1) visit(s, -1);
    }
  }

  void visit(Vertex u, Vertex parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (Vertex w : g.neighbors(u)) {
      if (w == parent) continue;
      if (disc[w] == -1) {
        ++children;
        stack.emplace_back(u, w);
        visit(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] > disc[u]) bridge_list.emplace_back(u, w);
        if (low[w] >= disc[u]) {
          if (parent != -1) is_cut[u] = true;
          std::vector<Edge> block;
          const Edge split(u, w);
          while (true) {
            const Edge top = stack.back();
            stack.pop_back();
            block.push_back(top);
            if (top == split) break;
          }
          block_edges.push_back(std::move(block));
        }
      } else if (disc[w] < disc[u]) {
        low[u] = std::min(low[u], disc[w]);
        stack.emplace_back(u, w);
      }
    }
    if (parent == -1 && children > 1) is_cut[u] = true;
  }
};

}  // namespace

std::vector<Vertex> cut_vertices(const Graph& graph) {
  LowLink ll(graph);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < graph.order(); ++v) {
    if (ll.is_cut[v]) out.push_back(v);
  }
  return out;
}

std::vector<Edge> bridges(const Graph& graph) {
  LowLink ll(graph);
  std::sort(ll.bridge_list.begin(), ll.bridge_list.end());
  return ll.bridge_list;
}

BlockDecomposition block_decomposition(const Graph& graph) {
  if (!is_connected(graph)) throw PreconditionError("block decomposition needs a connected graph");
  BlockDecomposition out;
  const int n = graph.order();
  out.blocks_of.resize(static_cast<std::size_t>(n));
  if (n == 1) {
    out.blocks.push_back(Block{{0}, {}});
  } else {
    LowLink ll(graph);
    for (auto& edges : ll.block_edges) {
      Block b;
      for (const Edge& e : edges) {
        b.vertices.push_back(e.u);
        b.vertices.push_back(e.v);
      }
      std::sort(b.vertices.begin(), b.vertices.end());
      b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
      std::sort(edges.begin(), edges.end());
      b.edges = std::move(edges);
      out.blocks.push_back(std::move(b));
    }
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const Block& x, const Block& y) { return x.vertices < y.vertices; });
  }
  for (std::size_t i = 0; i < out.blocks.size(); ++i) {
    for (Vertex v : out.blocks[i].vertices) out.blocks_of[v].push_back(static_cast<int>(i));
  }
  const int nb = static_cast<int>(out.blocks.size());
  for (Vertex v = 0; v < n; ++v) {
    if (out.blocks_of[v].size() >= 2) out.cut_vertices.push_back(v);
  }
  out.tree.resize(static_cast<std::size_t>(nb) + out.cut_vertices.size());
  for (std::size_t i = 0; i < out.cut_vertices.size(); ++i) {
    const int node = nb + static_cast<int>(i);
    for (int b : out.blocks_of[out.cut_vertices[i]]) {
      out.tree[node].push_back(b);
      out.tree[b].push_back(node);
    }
  }
  for (auto& adj : out.tree) std::sort(adj.begin(), adj.end());
  return out;
}

bool is_cactus(const Graph& graph) {
  if (!is_connected(graph)) return false;
  if (graph.order() == 1) return true;
  const auto dec = block_decomposition(graph);
  return std::all_of(dec.blocks.begin(), dec.blocks.end(),
                     [](const Block& b) { return b.is_bridge() || b.is_cycle(); });
}

bool is_block_graph(const Graph& graph) {
  if (!is_connected(graph)) return false;
  const auto dec = block_decomposition(graph);
  return std::all_of(dec.blocks.begin(), dec.blocks.end(),
                     [](const Block& b) { return b.is_complete(); });
}

bool is_tree(const Graph& graph) {
  return is_connected(graph) && graph.size() == graph.order() - 1;
}

std::vector<Vertex> universal_vertices(const Graph& graph) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < graph.order(); ++v) {
    if (graph.degree(v) == graph.order() - 1) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> leaves(const Graph& graph) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < graph.order(); ++v) {
    if (graph.degree(v) == 1) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> isolated_vertices(const Graph& graph) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < graph.order(); ++v) {
    if (graph.degree(v) == 0) out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t combine(std::uint64_t seed, std::uint64_t value) { return mix(seed ^ mix(value)); }

// Per-vertex distance profile: counts of vertices at each distance, with the
// unreachable count last.
std::vector<int> distance_profile(const DistanceMatrix& dist, Vertex u) {
  std::vector<int> profile(static_cast<std::size_t>(dist.order()) + 1, 0);
  for (Vertex v = 0; v < dist.order(); ++v) {
    const int d = dist(u, v);
    ++profile[d == DistanceMatrix::kUnreachable ? dist.order() : d];
  }
  return profile;
}

// Joint colour refinement of a and b so that colour ids are comparable across
// the two graphs.
std::pair<std::vector<int>, std::vector<int>> joint_refinement(const Graph& a, const DistanceMatrix& da,
                                                               const Graph& b, const DistanceMatrix& db) {
  const int na = a.order(), nb = b.order();
  std::vector<int> color(static_cast<std::size_t>(na + nb));
  {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> keys(color.size());
    for (Vertex v = 0; v < na; ++v) keys[v] = distance_profile(da, v);
    for (Vertex v = 0; v < nb; ++v) keys[na + v] = distance_profile(db, v);
    for (const auto& k : keys) ids.emplace(k, 0);
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (std::size_t i = 0; i < keys.size(); ++i) color[i] = ids[keys[i]];
  }
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> keys(color.size());
    for (std::size_t i = 0; i < color.size(); ++i) {
      const Graph& g = i < static_cast<std::size_t>(na) ? a : b;
      const int offset = i < static_cast<std::size_t>(na) ? 0 : na;
      const Vertex v = static_cast<Vertex>(i) - offset;
      std::vector<int> key{color[i]};
      std::vector<int> nbr;
      for (Vertex w : g.neighbors(v)) nbr.push_back(color[w + offset]);
      std::sort(nbr.begin(), nbr.end());
      key.insert(key.end(), nbr.begin(), nbr.end());
      keys[i] = std::move(key);
    }
    for (const auto& k : keys) ids.emplace(k, 0);
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (std::size_t i = 0; i < keys.size(); ++i) color[i] = ids[keys[i]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {std::vector<int>(color.begin(), color.begin() + na), std::vector<int>(color.begin() + na, color.end())};
}

struct IsoSearch {
  const DistanceMatrix& da;
  const DistanceMatrix& db;
  const std::vector<int>& ca;
  const std::vector<int>& cb;
  std::vector<Vertex> order;
  std::vector<Vertex> map_ab, map_ba;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex g = order[depth];
    for (Vertex h = 0; h < db.order(); ++h) {
      if (map_ba[h] != -1 || cb[h] != ca[g]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Vertex g2 = order[i];
        ok = da(g, g2) == db(h, map_ab[g2]);
      }
      if (!ok) continue;
      map_ab[g] = h;
      map_ba[h] = g;
      if (extend(depth + 1)) return true;
      map_ab[g] = -1;
      map_ba[h] = -1;
    }
    return false;
  }
};

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  if (sorted_degrees(a) != sorted_degrees(b)) return std::nullopt;
  const int n = a.order();
  if (n == 0) return std::vector<Vertex>{};
  const DistanceMatrix da(a), db(b);
  auto [ca, cb] = joint_refinement(a, da, b, db);
  {
    auto ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return std::nullopt;
  }
  std::vector<int> class_size(static_cast<std::size_t>(n) * 2 + 1, 0);
  for (int c : ca) ++class_size[c];

  // Match rarest colours first, then grow along already-placed vertices.
  std::vector<Vertex> order;
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  std::vector<int> placed_nbrs(static_cast<std::size_t>(n), 0);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == -1) {
        best = v;
        continue;
      }
      const auto key = [&](Vertex x) { return std::make_tuple(-placed_nbrs[x], class_size[ca[x]], x); };
      if (key(v) < key(best)) best = v;
    }
    placed[best] = true;
    order.push_back(best);
    for (Vertex w : a.neighbors(best)) ++placed_nbrs[w];
  }

  IsoSearch search{da, db, ca, cb, std::move(order), std::vector<Vertex>(static_cast<std::size_t>(n), -1),
                   std::vector<Vertex>(static_cast<std::size_t>(n), -1)};
  if (!search.extend(0)) return std::nullopt;
  return search.map_ab;
}

bool is_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

bool verify_isomorphism(const Graph& a, const Graph& b, std::span<const Vertex> mapping) {
  const int n = a.order();
  if (b.order() != n || a.size() != b.size() || static_cast<int>(mapping.size()) != n) return false;
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (Vertex x : mapping) {
    if (x < 0 || x >= n || hit[x]) return false;
    hit[x] = true;
  }
  for (const Edge& e : a.edges()) {
    if (!b.has_edge(mapping[e.u], mapping[e.v])) return false;
  }
  return true;
}

std::uint64_t invariant_hash(const Graph& graph) {
  const int n = graph.order();
  const DistanceMatrix dist(graph);
  std::vector<std::uint64_t> label(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    std::uint64_t h = 0x51ed27f3a1b2c3d4ULL;
    for (int c : distance_profile(dist, v)) h = combine(h, static_cast<std::uint64_t>(c));
    label[v] = h;
  }
  std::vector<std::uint64_t> next(label.size()), nbr;
  for (int round = 0; round < n; ++round) {
    for (Vertex v = 0; v < n; ++v) {
      nbr.clear();
      for (Vertex w : graph.neighbors(v)) nbr.push_back(label[w]);
      std::sort(nbr.begin(), nbr.end());
      std::uint64_t h = label[v];
      for (auto x : nbr) h = combine(h, x);
      next[v] = h;
    }
    label.swap(next);
  }
  std::sort(label.begin(), label.end());
  std::uint64_t h = combine(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(graph.size()));
  for (auto x : label) h = combine(h, x);
  return h;
}

}  // namespace packcrit
