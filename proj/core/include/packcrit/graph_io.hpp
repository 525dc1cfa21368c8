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

// Text formats: graph6, a plain edge list, and DOT export.

#pragma once

#include <span>
#include <string>
#include <string_view>

#include "packcrit/graph.hpp"

namespace packcrit {

/// Decodes one graph6 record. A single trailing newline is tolerated; any
/// other defect throws ParseError carrying the offending byte offset.
Graph parse_graph6(std::string_view line);

/// Encodes the graph under its current labelling. Orders above 62 use the
/// multi-byte size prefix.
std::string emit_graph6(const Graph& graph);

/// Edge-list document:
///   n <count>
///   u v        (one edge per line)
/// Blank lines and lines starting with '#' are ignored. Errors carry the
/// 1-based line number.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& graph);

/// Undirected DOT. When `colors` is non-empty it must have one entry per
/// vertex; each node is then labelled with its colour.
std::string emit_dot(const Graph& graph, std::span<const int> colors = {});

}  // namespace packcrit
