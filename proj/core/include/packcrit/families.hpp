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

// Named graph families: a small spec language, generators, the closed-form
// packing chromatic numbers and criticality verdicts known for them, and a
// structural recogniser.
//
// Spec grammar (as accepted by parse_family_spec and produced by to_string):
//   G<q>^<r>(k1,m1;...;kq,mq)   main cycle C_r, q consecutive cut vertices,
//                               cut vertex i carrying ki pendant edges and
//                               mi pendant triangles
//   H(k1,m1;k2,m2)              two adjacent hubs with pendants
//   T<n> C<n> P<n> K<n> K1,<n> W<n>
//                               friendship, cycle, path, complete, star,
//                               wheel (hub plus C_{n-1})

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "packcrit/graph.hpp"

namespace packcrit {

/// Pendant blocks hanging off one cut vertex.
struct Attachment {
  int leaves = 0;     // K2 blocks (k)
  int triangles = 0;  // C3 blocks (m)

  int vertex_count() const noexcept { return leaves + 2 * triangles; }
  bool empty() const noexcept { return leaves == 0 && triangles == 0; }
  friend auto operator<=>(const Attachment&, const Attachment&) = default;
};

namespace family {

struct Path { int n = 1; friend bool operator==(const Path&, const Path&) = default; };
struct Cycle { int n = 3; friend bool operator==(const Cycle&, const Cycle&) = default; };
struct Complete { int n = 1; friend bool operator==(const Complete&, const Complete&) = default; };
/// K_{1,n}.
struct Star { int n = 1; friend bool operator==(const Star&, const Star&) = default; };
/// C_{n-1} plus a universal hub.
struct Wheel { int n = 4; friend bool operator==(const Wheel&, const Wheel&) = default; };
/// n triangles sharing one vertex.
struct Friendship { int n = 1; friend bool operator==(const Friendship&, const Friendship&) = default; };

/// Main cycle C_r whose first q = attachments.size() vertices (consecutive)
/// are cut vertices.
struct CycleCactus {
  int r = 3;
  std::vector<Attachment> attachments;
  friend bool operator==(const CycleCactus&, const CycleCactus&) = default;
};

/// Two adjacent hubs u1, u2 with pendant blocks.
struct TwoHub {
  Attachment first;
  Attachment second;
  friend bool operator==(const TwoHub&, const TwoHub&) = default;
};

}  // namespace family

using FamilySpec = std::variant<family::Path, family::Cycle, family::Complete, family::Star, family::Wheel,
                                family::Friendship, family::CycleCactus, family::TwoHub>;

/// Throws GraphError explaining the first violated parameter constraint.
void validate(const FamilySpec& spec);

std::string to_string(const FamilySpec& spec);

/// Parses the spec grammar. Errors are ParseError with a byte offset into
/// `text`; see caret_diagnostic.
FamilySpec parse_family_spec(std::string_view text);

/// Two-line rendering of a parse error: the input, then a caret under the
/// offending position followed by the message.
std::string caret_diagnostic(std::string_view text, std::size_t position, std::string_view message);

struct BuiltFamily {
  Graph graph;
  /// Role of each vertex: "x1".."xr", "u1"/"u2", "hub", "leaf2.1", "u1.2"/"v1.2"
  /// for the triangle (x1,u1.2,v1.2), and so on.
  std::vector<std::string> roles;
};

BuiltFamily build(const FamilySpec& spec);
inline Graph build_graph(const FamilySpec& spec) { return build(spec).graph; }
int family_order(const FamilySpec& spec);

/// Known packing chromatic number of the family member, if a closed form
/// covers it.
std::optional<int> closed_form_chi_rho(const FamilySpec& spec);

/// Known criticality verdict, if a characterization covers the member.
std::optional<bool> closed_form_critical(const FamilySpec& spec);

/// Which of the twelve critical classes of radius-2, diameter-3 cacti the
/// spec belongs to, labelled "(i)" .. "(xii)".
std::optional<std::string> rad2_diam3_clause(const FamilySpec& spec);

/// Every family description of a connected graph, in a fixed order (complete,
/// path, cycle, star, friendship, wheel, two-hub, cycle cactus). Cycle-cactus
/// descriptions are tried with every largest cycle as the main block.
std::vector<FamilySpec> recognize_all(const Graph& graph);
std::optional<FamilySpec> recognize(const Graph& graph);

}  // namespace packcrit
