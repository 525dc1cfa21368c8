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

#include "packcrit/enumeration.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "packcrit/error.hpp"
#include "packcrit/graph_io.hpp"

namespace packcrit {
namespace {

bool in_class(GraphClass c, const Graph& g) {
  switch (c) {
    case GraphClass::kAll: return true;
    case GraphClass::kTree: return g.size() == g.order() - static_cast<int>(components(g).size());
    case GraphClass::kCactus:
    case GraphClass::kBlockGraph: {
      const auto parts = components(g);
      if (parts.size() == 1) return c == GraphClass::kCactus ? is_cactus(g) : is_block_graph(g);
      for (const auto& part : parts) {
        const Graph sub = induced_subgraph(g, part).graph;
        if (!(c == GraphClass::kCactus ? is_cactus(sub) : is_block_graph(sub))) return false;
      }
      return true;
    }
  }
  return false;
}

// Isomorphism classes bucketed by an invariant hash.
class ClassSet {
 public:
  bool insert(const Graph& g) {
    auto& bucket = buckets_[invariant_hash(g)];
    for (const Graph& h : bucket)
      if (h.size() == g.size() && is_isomorphic(h, g)) return false;
    bucket.push_back(g);
    ++count_;
    return true;
  }

  std::vector<Graph> sorted() const {
    std::vector<std::pair<std::string, const Graph*>> keyed;
    keyed.reserve(count_);
    for (const auto& [hash, bucket] : buckets_)
      for (const Graph& g : bucket) keyed.emplace_back(emit_graph6(g), &g);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
      if (a.second->size() != b.second->size()) return a.second->size() < b.second->size();
      return a.first < b.first;
    });
    std::vector<Graph> out;
    out.reserve(keyed.size());
    for (const auto& [key, g] : keyed) out.push_back(*g);
    return out;
  }

 private:
  std::unordered_map<std::uint64_t, std::vector<Graph>> buckets_;
  std::size_t count_ = 0;
};

// One level of vertex augmentation: every class member on n vertices arises
// from a member on n - 1 vertices (delete a non-cut vertex, or any vertex when
// disconnected graphs are allowed), so extending all representatives by one
// vertex over all neighbourhoods reaches every class.
std::vector<Graph> extend(const std::vector<Graph>& previous, int n, bool connected, GraphClass c) {
  ClassSet seen;
  const int old_n = n - 1;
  const std::uint32_t subsets = 1u << old_n;
  for (const Graph& base : previous) {
    const auto edges = base.edges();
    for (std::uint32_t mask = connected ? 1u : 0u; mask < subsets; ++mask) {
      if (c == GraphClass::kTree && connected && __builtin_popcount(mask) != 1) continue;
      Graph g(n);
      for (const Edge& e : edges) g.add_edge(e.u, e.v);
      for (int v = 0; v < old_n; ++v)
        if (mask >> v & 1u) g.add_edge(v, old_n);
      if (connected && !is_connected(g)) continue;
      if (!in_class(c, g)) continue;
      seen.insert(g);
    }
  }
  return seen.sorted();
}

void check_filter(const EnumerationFilter& f) {
  if (f.min_n < 1 || f.max_n < f.min_n) throw PreconditionError("enumeration needs 1 <= min_n <= max_n");
  const int cap = order_cap(f);
  if (f.max_n > cap) {
    throw PreconditionError("enumeration cap exceeded: max_n = " + std::to_string(f.max_n) + " but the " +
                            std::string(to_string(f.graph_class)) + " cap is " + std::to_string(cap));
  }
}

bool metrics_match(const EnumerationFilter& f, const Graph& g) {
  if (!f.radius && !f.diameter) return true;
  if (!is_connected(g)) return false;
  const DistanceMatrix dist(g);
  if (f.radius && radius(dist) != *f.radius) return false;
  if (f.diameter && diameter(dist) != *f.diameter) return false;
  return true;
}

}  // namespace

std::string_view to_string(GraphClass c) {
  switch (c) {
    case GraphClass::kAll: return "general";
    case GraphClass::kTree: return "tree";
    case GraphClass::kCactus: return "cactus";
    case GraphClass::kBlockGraph: return "block-graph";
  }
  return "?";
}

int order_cap(const EnumerationFilter& f) {
  const int base = f.graph_class == GraphClass::kAll ? kGeneralOrderCap : kStructuredOrderCap;
  return f.cap ? std::min(base, *f.cap) : base;
}

bool matches(const EnumerationFilter& f, const Graph& g) {
  if (g.order() < f.min_n || g.order() > f.max_n) return false;
  if (f.connected && !is_connected(g)) return false;
  return in_class(f.graph_class, g) && metrics_match(f, g);
}

void enumerate_graphs(const EnumerationFilter& f, const std::function<void(const Graph&)>& visit) {
  check_filter(f);
  std::vector<Graph> level{Graph(1)};
  for (int n = 1; n <= f.max_n; ++n) {
    if (n > 1) level = extend(level, n, f.connected, f.graph_class);
    if (n < f.min_n) continue;
    for (const Graph& g : level)
      if (metrics_match(f, g)) visit(g);
  }
}

std::vector<Graph> enumerate_graphs(const EnumerationFilter& f) {
  std::vector<Graph> out;
  enumerate_graphs(f, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> enumerate_cacti(EnumerationFilter filter) {
  filter.graph_class = GraphClass::kCactus;
  return enumerate_graphs(filter);
}

std::vector<Graph> filter_corpus(std::span<const Graph> corpus, const EnumerationFilter& f) {
  std::vector<ClassSet> by_order(static_cast<std::size_t>(f.max_n) + 1);
  for (const Graph& g : corpus)
    if (matches(f, g)) by_order[static_cast<std::size_t>(g.order())].insert(g);
  std::vector<Graph> out;
  for (const auto& set : by_order) {
    auto part = set.sorted();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace packcrit
