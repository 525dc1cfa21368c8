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

#include "packcrit/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

#include "packcrit/error.hpp"

namespace packcrit {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

int decode_byte(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw ParseError("graph6: truncated record", pos);
  const int c = static_cast<unsigned char>(s[pos]);
  if (c < kBias || c > kMaxByte) throw ParseError("graph6: byte outside [63,126]", pos);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (!line.empty() && line.back() == '\n') line.remove_suffix(1);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.empty()) throw ParseError("graph6: empty record", 0);

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (line[0] != '~') {
    n = static_cast<std::uint64_t>(decode_byte(line, pos++));
  } else if (line.size() > 1 && line[1] == '~') {
    pos = 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | static_cast<std::uint64_t>(decode_byte(line, pos++));
  } else {
    pos = 1;
    for (int i = 0; i < 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(decode_byte(line, pos++));
  }
  if (n > 1'000'000) throw ParseError("graph6: order too large", 0);

  Graph g(static_cast<int>(n));
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t body = (bits + 5) / 6;
  if (line.size() < pos + body) throw ParseError("graph6: truncated record", line.size());
  if (line.size() > pos + body) throw ParseError("graph6: trailing bytes", pos + body);

  std::uint64_t k = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = decode_byte(line, pos + k / 6);
      if (chunk & (1 << (5 - k % 6))) g.add_edge(i, j);
    }
  }
  for (std::uint64_t b = bits; b < body * 6; ++b) {
    const int chunk = decode_byte(line, pos + b / 6);
    if (chunk & (1 << (5 - b % 6))) throw ParseError("graph6: non-zero padding bits", pos + b / 6);
  }
  // A body with no bits still has to be validated byte by byte.
  for (std::uint64_t b = 0; b < body; ++b) decode_byte(line, pos + b);
  return g;
}

std::string emit_graph6(const Graph& graph) {
  const std::uint64_t n = static_cast<std::uint64_t>(graph.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else if (n <= 68719476735ULL) {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    throw GraphError("graph6: order exceeds the format's limit");
  }
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < graph.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (graph.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

namespace {

// Whitespace-separated tokens up to an optional '#' comment.
std::vector<std::string_view> tokens(std::string_view line) {
  line = line.substr(0, line.find('#'));
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

int to_int(std::string_view tok, std::size_t line_no) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0) {
    throw ParseError("edge list: expected a non-negative integer, got '" + std::string(tok) + "'", line_no);
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<Graph> g;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    if (!g) {
      if (tok.size() != 2 || tok[0] != "n") throw ParseError("edge list: expected header 'n <count>'", line_no);
      g.emplace(to_int(tok[1], line_no));
      continue;
    }
    if (tok.size() != 2) throw ParseError("edge list: expected 'u v'", line_no);
    const int u = to_int(tok[0], line_no), v = to_int(tok[1], line_no);
    if (u >= g->order() || v >= g->order()) throw ParseError("edge list: vertex index >= n", line_no);
    if (u == v) throw ParseError("edge list: self-loop", line_no);
    g->add_edge(u, v);
  }
  if (!g) throw ParseError("edge list: missing header 'n <count>'", line_no);
  return *std::move(g);
}

std::string emit_edge_list(const Graph& graph) {
  std::ostringstream out;
  out << "n " << graph.order() << '\n';
  for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string emit_dot(const Graph& graph, std::span<const int> colors) {
  if (!colors.empty() && static_cast<int>(colors.size()) != graph.order()) {
    throw GraphError("dot: colour array length does not match the vertex count");
  }
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < graph.order(); ++v) {
    out << "  " << v;
    if (!colors.empty()) out << " [label=\"" << v << ":" << colors[v] << "\"]";
    out << ";\n";
  }
  for (const Edge& e : graph.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace packcrit
