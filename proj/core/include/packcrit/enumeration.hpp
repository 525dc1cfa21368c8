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

// Isomorph-free generation of small graphs, trees, cacti and block graphs.

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "packcrit/graph.hpp"

namespace packcrit {

enum class GraphClass { kAll, kTree, kCactus, kBlockGraph };

std::string_view to_string(GraphClass c);

inline constexpr int kGeneralOrderCap = 8;
inline constexpr int kStructuredOrderCap = 11;

struct EnumerationFilter {
  int min_n = 1;
  int max_n = 1;
  /// When false, disconnected graphs whose components all lie in the class
  /// are emitted as well.
  bool connected = true;
  GraphClass graph_class = GraphClass::kAll;
  std::optional<int> radius;
  std::optional<int> diameter;
  /// Overrides the default order cap for the class (never raises it).
  std::optional<int> cap;
};

/// Largest order the filter may request.
int order_cap(const EnumerationFilter& filter);

/// Membership test for the filter (class, connectivity, order, metrics).
bool matches(const EnumerationFilter& filter, const Graph& graph);

/// One graph per isomorphism class satisfying the filter, ordered by order,
/// then size, then graph6 text. Throws PreconditionError when the filter
/// exceeds its cap or is malformed.
std::vector<Graph> enumerate_graphs(const EnumerationFilter& filter);
void enumerate_graphs(const EnumerationFilter& filter, const std::function<void(const Graph&)>& visit);

/// enumerate_graphs with the class forced to cactus.
std::vector<Graph> enumerate_cacti(EnumerationFilter filter);

/// Filters an externally supplied corpus and drops isomorphic duplicates,
/// keeping the first occurrence. The result uses the same ordering as
/// enumerate_graphs.
std::vector<Graph> filter_corpus(std::span<const Graph> corpus, const EnumerationFilter& filter);

}  // namespace packcrit
