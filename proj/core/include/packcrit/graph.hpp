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

// Finite simple undirected graphs on vertices 0..n-1, plus the metric and
// structural queries (distances, blocks, cut vertices, isomorphism) the rest
// of the library is built on.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace packcrit {

using Vertex = int;

/// Unordered vertex pair stored with u <= v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  /// Builds a graph from an edge list. Duplicate pairs collapse; a self-loop or
  /// an out-of-range endpoint throws GraphError naming the offending pair.
  static Graph build(int order, std::span<const std::pair<Vertex, Vertex>> edges);
  static Graph build(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges);
  static Graph build(int order, std::span<const Edge> edges);

  /// Inserts uv. Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v);

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  int size() const noexcept { return edge_count_; }
  bool empty() const noexcept { return adjacency_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < order(); }

  /// All edges, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
};

/// All-pairs BFS distances. Pairs in different components hold kUnreachable.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix() = default;
  explicit DistanceMatrix(const Graph& graph);

  int order() const noexcept { return n_; }
  int operator()(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  bool reachable(Vertex u, Vertex v) const { return (*this)(u, v) != kUnreachable; }
  /// True when every pair is reachable (and the graph has at least one vertex).
  bool connected() const noexcept;

 private:
  int n_ = 0;
  std::vector<int> d_;
};

inline DistanceMatrix all_pairs_distances(const Graph& graph) { return DistanceMatrix(graph); }

// Metric queries. All of them throw PreconditionError on an empty or
// disconnected graph; infinite eccentricities are never reported.
int eccentricity(const DistanceMatrix& dist, Vertex u);
int eccentricity(const Graph& graph, Vertex u);
int radius(const DistanceMatrix& dist);
int radius(const Graph& graph);
int diameter(const DistanceMatrix& dist);
int diameter(const Graph& graph);
std::vector<Vertex> center(const DistanceMatrix& dist);
std::vector<Vertex> center(const Graph& graph);

/// A graph obtained by keeping a subset of vertices. `original[i]` is the
/// label in the parent graph of vertex i of `graph`.
struct Relabeled {
  Graph graph;
  std::vector<Vertex> original;
};

Graph delete_edge(const Graph& graph, Edge e);
Relabeled delete_vertex(const Graph& graph, Vertex v);
Relabeled induced_subgraph(const Graph& graph, std::span<const Vertex> vertices);

/// G plus one new vertex (labelled graph.order()) adjacent to every vertex.
Graph add_universal_vertex(const Graph& graph);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex. The 0-vertex graph has no components.
std::vector<std::vector<Vertex>> components(const Graph& graph);
bool is_connected(const Graph& graph);

std::vector<Vertex> cut_vertices(const Graph& graph);
std::vector<Edge> bridges(const Graph& graph);

struct Block {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // sorted

  int order() const noexcept { return static_cast<int>(vertices.size()); }
  bool is_bridge() const noexcept { return vertices.size() == 2; }
  /// A 2-connected block with as many edges as vertices is a cycle.
  bool is_cycle() const noexcept { return vertices.size() >= 3 && edges.size() == vertices.size(); }
  bool is_complete() const noexcept {
    const auto k = vertices.size();
    return edges.size() == k * (k - 1) / 2;
  }
  bool contains(Vertex v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<Vertex> cut_vertices;
  /// blocks_of[v]: indices of the blocks containing v.
  std::vector<std::vector<int>> blocks_of;
  /// Block-cut tree. Nodes [0, blocks.size()) are blocks, node
  /// blocks.size() + i is cut_vertices[i].
  std::vector<std::vector<int>> tree;
};

/// Blocks of a connected graph. K1 yields one edgeless block.
BlockDecomposition block_decomposition(const Graph& graph);

bool is_cactus(const Graph& graph);
bool is_block_graph(const Graph& graph);
bool is_tree(const Graph& graph);

std::vector<Vertex> universal_vertices(const Graph& graph);
std::vector<Vertex> leaves(const Graph& graph);
std::vector<Vertex> isolated_vertices(const Graph& graph);

/// Vertex bijection f with uv in E(a) iff f(u)f(v) in E(b), if one exists.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b);
bool is_isomorphic(const Graph& a, const Graph& b);
/// Checks that `mapping` is an isomorphism from a onto b.
bool verify_isomorphism(const Graph& a, const Graph& b, std::span<const Vertex> mapping);

/// Labelling-independent 64-bit fingerprint (colour refinement seeded with
/// distance profiles). Isomorphic graphs always agree; collisions between
/// non-isomorphic graphs are possible but rare.
std::uint64_t invariant_hash(const Graph& graph);

}  // namespace packcrit
