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

#include "packcrit/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "packcrit/error.hpp"

namespace packcrit {
namespace {

constexpr int kMaxFamilyOrder = 1 << 20;

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::string pair_text(const Attachment& a) { return std::to_string(a.leaves) + "," + std::to_string(a.triangles); }

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

void validate_attachment(const Attachment& a, const std::string& where) {
  require(a.leaves >= 0 && a.triangles >= 0, where + ": pendant counts must be non-negative");
  require(!a.empty(), where + ": a cut vertex needs at least one pendant block (k + m >= 1)");
}

long long attachment_total(const std::vector<Attachment>& list) {
  long long total = 0;
  for (const auto& a : list) total += static_cast<long long>(a.leaves) + 2LL * a.triangles;
  return total;
}

// Appends the pendants of `a` to cut vertex `cut`, naming them with `tag`.
void attach(Graph& g, std::vector<std::string>& roles, Vertex cut, const Attachment& a, const std::string& tag,
            const char* first, const char* second) {
  for (int j = 1; j <= a.leaves; ++j) {
    const auto leaf = static_cast<Vertex>(roles.size());
    roles.push_back("leaf" + tag + "." + std::to_string(j));
    g.add_edge(cut, leaf);
  }
  for (int j = 1; j <= a.triangles; ++j) {
    const auto p = static_cast<Vertex>(roles.size());
    roles.push_back(first + tag + "." + std::to_string(j));
    roles.push_back(second + tag + "." + std::to_string(j));
    g.add_edge(cut, p);
    g.add_edge(cut, p + 1);
    g.add_edge(p, p + 1);
  }
}

std::vector<std::string> numbered(const char* stem, int count) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

// ---- parsing ----

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  FamilySpec parse() {
    if (text_.empty()) fail("empty family spec");
    const char head = text_[pos_];
    ++pos_;
    FamilySpec spec;
    switch (head) {
      case 'P': spec = family::Path{integer()}; break;
      case 'C': spec = family::Cycle{integer()}; break;
      case 'T': spec = family::Friendship{integer()}; break;
      case 'W': spec = family::Wheel{integer()}; break;
      case 'K': spec = complete_or_star(); break;
      case 'G': spec = cycle_cactus(); break;
      case 'H': spec = two_hub(); break;
      default:
        pos_ = 0;
        fail("unknown family '" + std::string(1, head) + "' (expected one of G H T C P K W)");
    }
    if (pos_ != text_.size()) fail("unexpected trailing input");
    try {
      validate(spec);
    } catch (const GraphError& e) {
      throw ParseError(e.what(), 0);
    }
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  int integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer");
    int value = 0;
    const auto [end, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || end != text_.data() + pos_ || value > kMaxFamilyOrder) {
      pos_ = start;
      fail("integer out of range");
    }
    return value;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Attachment pair() {
    skip_space();
    Attachment a;
    a.leaves = integer();
    skip_space();
    expect(',');
    skip_space();
    a.triangles = integer();
    skip_space();
    return a;
  }

  FamilySpec complete_or_star() {
    const std::size_t start = pos_;
    const int n = integer();
    if (pos_ < text_.size() && text_[pos_] == ',') {
      if (n != 1) {
        pos_ = start;
        fail("only stars K1,n are supported among complete bipartite graphs");
      }
      ++pos_;
      return family::Star{integer()};
    }
    return family::Complete{n};
  }

  FamilySpec cycle_cactus() {
    const std::size_t q_at = pos_;
    const int q = integer();
    expect('^');
    family::CycleCactus spec;
    spec.r = integer();
    expect('(');
    spec.attachments.push_back(pair());
    while (pos_ < text_.size() && text_[pos_] == ';') {
      ++pos_;
      spec.attachments.push_back(pair());
    }
    if (static_cast<int>(spec.attachments.size()) != q) {
      pos_ = q_at;
      fail("q = " + std::to_string(q) + " but " + std::to_string(spec.attachments.size()) + " pendant pairs given");
    }
    expect(')');
    return spec;
  }

  FamilySpec two_hub() {
    expect('(');
    family::TwoHub spec;
    spec.first = pair();
    expect(';');
    spec.second = pair();
    expect(')');
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// ---- recognition ----

// Classifies every vertex outside `core` as a pendant leaf or half of a
// pendant triangle on a core vertex. Fails if some vertex is neither.
std::optional<std::vector<Attachment>> pendant_profile(const Graph& g, const std::vector<Vertex>& core) {
  std::vector<int> slot(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < core.size(); ++i) slot[static_cast<std::size_t>(core[i])] = static_cast<int>(i);
  std::vector<Attachment> out(core.size());
  for (Vertex w = 0; w < g.order(); ++w) {
    if (slot[static_cast<std::size_t>(w)] >= 0) continue;
    const auto nb = g.neighbors(w);
    if (nb.size() == 1) {
      const int s = slot[static_cast<std::size_t>(nb[0])];
      if (s < 0) return std::nullopt;
      ++out[static_cast<std::size_t>(s)].leaves;
      continue;
    }
    if (nb.size() != 2) return std::nullopt;
    const bool first_core = slot[static_cast<std::size_t>(nb[0])] >= 0;
    const Vertex c = first_core ? nb[0] : nb[1];
    const Vertex mate = first_core ? nb[1] : nb[0];
    if (slot[static_cast<std::size_t>(c)] < 0 || slot[static_cast<std::size_t>(mate)] >= 0) return std::nullopt;
    if (g.degree(mate) != 2 || !g.has_edge(mate, c)) return std::nullopt;
    if (w < mate) ++out[static_cast<std::size_t>(slot[static_cast<std::size_t>(c)])].triangles;
  }
  return out;
}

// Vertices of a cycle block in cyclic order starting from its least vertex.
std::vector<Vertex> cyclic_order(const Graph& g, const Block& block) {
  std::vector<Vertex> order{block.vertices.front()};
  Vertex prev = -1;
  Vertex cur = block.vertices.front();
  while (true) {
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (w != prev && block.contains(w) && w != order.front()) {
        next = w;
        break;
      }
    }
    if (next == -1) break;
    if (std::find(order.begin(), order.end(), next) != order.end()) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

std::optional<family::CycleCactus> as_cycle_cactus(const Graph& g, const Block& block) {
  const auto ring = cyclic_order(g, block);
  const int r = static_cast<int>(ring.size());
  if (r != block.order() || r < 3 || r > 5) return std::nullopt;
  const auto profile = pendant_profile(g, ring);
  if (!profile) return std::nullopt;
  std::optional<family::CycleCactus> best;
  for (int start = 0; start < r; ++start) {
    for (int dir : {1, -1}) {
      std::vector<Attachment> seq;
      for (int step = 0; step < r; ++step) {
        const int idx = ((start + dir * step) % r + r) % r;
        seq.push_back((*profile)[static_cast<std::size_t>(idx)]);
      }
      int q = 0;
      while (q < r && !seq[static_cast<std::size_t>(q)].empty()) ++q;
      if (q == 0) continue;
      const bool rest_bare = std::all_of(seq.begin() + q, seq.end(), [](const Attachment& a) { return a.empty(); });
      if (!rest_bare) continue;
      seq.resize(static_cast<std::size_t>(q));
      if (!best || seq < best->attachments) best = family::CycleCactus{r, seq};
    }
  }
  return best;
}

void push_unique(std::vector<FamilySpec>& out, FamilySpec spec) {
  if (std::find(out.begin(), out.end(), spec) == out.end()) out.push_back(std::move(spec));
}

bool is_pendant_triangles(const family::CycleCactus& s) {
  return std::all_of(s.attachments.begin(), s.attachments.end(),
                     [](const Attachment& a) { return a.leaves == 0 && a.triangles >= 2; });
}

std::optional<std::string> triangle_clause(std::vector<Attachment> at) {
  // Clauses on the C3 main block up to rotation and reflection, which on a
  // triangle means up to any permutation of the three cut vertices.
  std::sort(at.begin(), at.end());
  auto big = [](const Attachment& a) { return a.leaves == 0 && a.triangles >= 2; };
  const Attachment two_leaves{2, 0};
  const Attachment one_leaf{1, 0};
  const Attachment one_triangle{0, 1};
  if (at[0] == one_leaf && at[1] == one_leaf && at[2] == one_leaf) return "(v)";
  // sorted order: (0,1) < (2,0)
  if (at[0] == one_triangle && at[1] == two_leaves && at[2] == two_leaves) return "(vi)";
  const int bigs = static_cast<int>(std::count_if(at.begin(), at.end(), big));
  const int twos = static_cast<int>(std::count(at.begin(), at.end(), two_leaves));
  if (bigs == 3) return "(vii)";
  if (bigs == 2 && twos == 1) return "(viii)";
  if (bigs == 1 && twos == 2) return "(ix)";
  return std::nullopt;
}

}  // namespace

void validate(const FamilySpec& spec) {
  std::visit(Overloaded{
                 [](const family::Path& s) { require(s.n >= 1, "P" + std::to_string(s.n) + ": a path needs n >= 1"); },
                 [](const family::Cycle& s) { require(s.n >= 3, "C" + std::to_string(s.n) + ": a cycle needs n >= 3"); },
                 [](const family::Complete& s) {
                   require(s.n >= 1, "K" + std::to_string(s.n) + ": a complete graph needs n >= 1");
                 },
                 [](const family::Star& s) { require(s.n >= 1, "K1," + std::to_string(s.n) + ": a star needs n >= 1"); },
                 [](const family::Wheel& s) { require(s.n >= 4, "W" + std::to_string(s.n) + ": a wheel needs n >= 4"); },
                 [](const family::Friendship& s) {
                   require(s.n >= 1, "T" + std::to_string(s.n) + ": a friendship graph needs n >= 1");
                 },
                 [](const family::CycleCactus& s) {
                   require(s.r >= 3 && s.r <= 5, "main cycle length r must be 3, 4 or 5 (got " + std::to_string(s.r) + ")");
                   const int q = static_cast<int>(s.attachments.size());
                   require(q >= 1 && q <= s.r, "number of cut vertices q must satisfy 1 <= q <= r (got q = " +
                                                   std::to_string(q) + ", r = " + std::to_string(s.r) + ")");
                   for (int i = 0; i < q; ++i) validate_attachment(s.attachments[static_cast<std::size_t>(i)], "x" + std::to_string(i + 1));
                   require(s.r + attachment_total(s.attachments) <= kMaxFamilyOrder, "family member too large");
                 },
                 [](const family::TwoHub& s) {
                   validate_attachment(s.first, "u1");
                   validate_attachment(s.second, "u2");
                   require(2 + attachment_total({s.first, s.second}) <= kMaxFamilyOrder, "family member too large");
                 },
             },
             spec);
  const auto n = std::visit(Overloaded{[](const family::CycleCactus&) { return 0LL; },
                                       [](const family::TwoHub&) { return 0LL; },
                                       [](const family::Friendship& s) { return 2LL * s.n + 1; },
                                       [](const family::Star& s) { return static_cast<long long>(s.n) + 1; },
                                       [](const auto& s) { return static_cast<long long>(s.n); }},
                            spec);
  require(n <= kMaxFamilyOrder, "family member too large");
}

std::string to_string(const FamilySpec& spec) {
  return std::visit(Overloaded{
                        [](const family::Path& s) { return "P" + std::to_string(s.n); },
                        [](const family::Cycle& s) { return "C" + std::to_string(s.n); },
                        [](const family::Complete& s) { return "K" + std::to_string(s.n); },
                        [](const family::Star& s) { return "K1," + std::to_string(s.n); },
                        [](const family::Wheel& s) { return "W" + std::to_string(s.n); },
                        [](const family::Friendship& s) { return "T" + std::to_string(s.n); },
                        [](const family::CycleCactus& s) {
                          std::string out = "G" + std::to_string(s.attachments.size()) + "^" + std::to_string(s.r) + "(";
                          for (std::size_t i = 0; i < s.attachments.size(); ++i) {
                            if (i) out += ';';
                            out += pair_text(s.attachments[i]);
                          }
                          return out + ")";
                        },
                        [](const family::TwoHub& s) { return "H(" + pair_text(s.first) + ";" + pair_text(s.second) + ")"; },
                    },
                    spec);
}

FamilySpec parse_family_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string caret_diagnostic(std::string_view text, std::size_t position, std::string_view message) {
  std::string out(text);
  out += '\n';
  out.append(std::min(position, text.size()), ' ');
  out += "^ ";
  out += message;
  return out;
}

int family_order(const FamilySpec& spec) {
  validate(spec);
  return std::visit(Overloaded{
                        [](const family::CycleCactus& s) { return s.r + static_cast<int>(attachment_total(s.attachments)); },
                        [](const family::TwoHub& s) { return 2 + static_cast<int>(attachment_total({s.first, s.second})); },
                        [](const family::Friendship& s) { return 2 * s.n + 1; },
                        [](const family::Star& s) { return s.n + 1; },
                        [](const auto& s) { return s.n; },
                    },
                    spec);
}

BuiltFamily build(const FamilySpec& spec) {
  const int n = family_order(spec);
  BuiltFamily out{Graph(n), {}};
  Graph& g = out.graph;
  auto& roles = out.roles;
  std::visit(Overloaded{
                 [&](const family::Path& s) {
                   roles = numbered("p", s.n);
                   for (Vertex v = 1; v < s.n; ++v) g.add_edge(v - 1, v);
                 },
                 [&](const family::Cycle& s) {
                   roles = numbered("c", s.n);
                   for (Vertex v = 0; v < s.n; ++v) g.add_edge(v, (v + 1) % s.n);
                 },
                 [&](const family::Complete& s) {
                   roles = numbered("k", s.n);
                   for (Vertex u = 0; u < s.n; ++u)
                     for (Vertex v = u + 1; v < s.n; ++v) g.add_edge(u, v);
                 },
                 [&](const family::Star& s) {
                   roles = {"hub"};
                   auto rest = numbered("leaf", s.n);
                   roles.insert(roles.end(), rest.begin(), rest.end());
                   for (Vertex v = 1; v <= s.n; ++v) g.add_edge(0, v);
                 },
                 [&](const family::Wheel& s) {
                   const int rim = s.n - 1;
                   roles = numbered("c", rim);
                   roles.emplace_back("hub");
                   for (Vertex v = 0; v < rim; ++v) {
                     g.add_edge(v, (v + 1) % rim);
                     g.add_edge(v, rim);
                   }
                 },
                 [&](const family::Friendship& s) {
                   roles = {"hub"};
                   for (int j = 1; j <= s.n; ++j) {
                     const auto p = static_cast<Vertex>(roles.size());
                     roles.push_back("u" + std::to_string(j));
                     roles.push_back("v" + std::to_string(j));
                     g.add_edge(0, p);
                     g.add_edge(0, p + 1);
                     g.add_edge(p, p + 1);
                   }
                 },
                 [&](const family::CycleCactus& s) {
                   roles = numbered("x", s.r);
                   for (Vertex v = 0; v < s.r; ++v) g.add_edge(v, (v + 1) % s.r);
                   for (std::size_t i = 0; i < s.attachments.size(); ++i) {
                     attach(g, roles, static_cast<Vertex>(i), s.attachments[i], std::to_string(i + 1), "u", "v");
                   }
                 },
                 [&](const family::TwoHub& s) {
                   roles = {"u1", "u2"};
                   g.add_edge(0, 1);
                   attach(g, roles, 0, s.first, "1", "a", "b");
                   attach(g, roles, 1, s.second, "2", "a", "b");
                 },
             },
             spec);
  return out;
}

std::optional<int> closed_form_chi_rho(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      Overloaded{
          [](const family::Path& s) -> std::optional<int> { return s.n >= 4 ? 3 : std::min(s.n, 2); },
          [](const family::Cycle& s) -> std::optional<int> {
            if (s.n == 3 || s.n == 4) return 3;
            if (s.n == 5) return 4;
            return std::nullopt;
          },
          [](const family::Complete& s) -> std::optional<int> { return s.n; },
          [](const family::Star&) -> std::optional<int> { return 2; },
          [](const family::Wheel&) -> std::optional<int> { return std::nullopt; },
          [](const family::Friendship& s) -> std::optional<int> { return s.n + 2; },
          [](const family::CycleCactus& s) -> std::optional<int> {
            const auto& a = s.attachments;
            const int q = static_cast<int>(a.size());
            if (s.r == 5 && q == 1) return a[0].triangles == 0 ? 4 : a[0].triangles + 3;
            if (s.r == 4 && q == 1) return a[0].triangles == 0 ? 3 : a[0].triangles + 2;
            if (q != 2) return std::nullopt;
            const int t = a[0].triangles + a[1].triangles;
            if (s.r == 5) {
              if (t == 0) return 4;
              if (a[0].triangles >= 1 && a[1].triangles >= 1) return t + 2;
              return t + 3;
            }
            if (s.r == 4) return t == 0 ? 4 : t + 3;
            return std::nullopt;
          },
          [](const family::TwoHub& s) -> std::optional<int> {
            if (s.first.triangles >= 1 && s.second.triangles == 0 && s.second.leaves >= 2) return s.first.triangles + 3;
            if (s.second.triangles >= 1 && s.first.triangles == 0 && s.first.leaves >= 2) return s.second.triangles + 3;
            return std::nullopt;
          },
      },
      spec);
}

std::optional<std::string> rad2_diam3_clause(const FamilySpec& spec) {
  validate(spec);
  return std::visit(Overloaded{
                        [](const family::Path& s) -> std::optional<std::string> {
                          if (s.n == 4) return "(i)";
                          return std::nullopt;
                        },
                        [](const family::CycleCactus& s) -> std::optional<std::string> {
                          const auto& a = s.attachments;
                          if (s.r == 5 && a.size() == 1 && is_pendant_triangles(s)) return "(ii)";
                          if (s.r == 4 && a.size() == 2) {
                            if (a[0] == Attachment{1, 0} && a[1] == Attachment{1, 0}) return "(iii)";
                            if (a[0].leaves == 0 && a[1].leaves == 0 && a[0].triangles >= 1 && a[1].triangles >= 1)
                              return "(iv)";
                          }
                          if (s.r == 3 && a.size() == 3) return triangle_clause(a);
                          return std::nullopt;
                        },
                        [](const family::TwoHub& s) -> std::optional<std::string> {
                          auto lo = std::min(s.first, s.second);
                          auto hi = std::max(s.first, s.second);
                          auto big = [](const Attachment& x) { return x.leaves == 0 && x.triangles >= 2; };
                          if (lo == Attachment{1, 0} && hi == Attachment{1, 0}) return "(i)";
                          if (lo == Attachment{0, 1} && hi == Attachment{2, 0}) return "(x)";
                          if (big(lo) && big(hi)) return "(xi)";
                          if (big(lo) && hi == Attachment{2, 0}) return "(xii)";
                          return std::nullopt;
                        },
                        [](const auto&) -> std::optional<std::string> { return std::nullopt; },
                    },
                    spec);
}

std::optional<bool> closed_form_critical(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      Overloaded{
          [](const family::Path& s) -> std::optional<bool> {
            if (s.n == 2 || s.n == 4) return true;
            if (s.n == 3) return false;
            return std::nullopt;
          },
          [](const family::Cycle& s) -> std::optional<bool> {
            if (s.n == 3 || s.n == 5) return true;
            if (s.n == 4) return false;
            return std::nullopt;
          },
          [](const family::Complete& s) -> std::optional<bool> {
            if (s.n >= 2) return true;
            return std::nullopt;
          },
          [](const family::Star& s) -> std::optional<bool> { return s.n == 1; },
          [](const family::Wheel& s) -> std::optional<bool> {
            const int rim = s.n - 1;
            if (rim == 3) return true;
            // hub plus a cycle: critical exactly when the rim is an odd cycle
            // of radius at least 3
            return rim % 2 == 1 && rim >= 7;
          },
          [](const family::Friendship&) -> std::optional<bool> { return true; },
          [&spec](const family::CycleCactus& s) -> std::optional<bool> {
            const auto& a = s.attachments;
            const auto q = a.size();
            if (s.r == 5 && q == 1) return a[0].leaves == 0 && a[0].triangles >= 2;
            if (s.r == 5 && q == 2) return false;
            if (s.r == 4 && q == 1) return false;
            if (s.r == 4 && q == 2) {
              const bool leafy = a[0] == Attachment{1, 0} && a[1] == Attachment{1, 0};
              const bool tri = a[0].leaves == 0 && a[1].leaves == 0 && a[0].triangles >= 1 && a[1].triangles >= 1;
              return leafy || tri;
            }
            if (s.r == 3 && q == 1) return a[0].leaves == 0;  // hub plus disjoint K2s
            if (s.r == 3 && q == 2) return false;
            if (s.r == 3 && q == 3) return rad2_diam3_clause(spec).has_value();
            return std::nullopt;
          },
          [&spec](const family::TwoHub& s) -> std::optional<bool> {
            if (s.first.triangles == 0 && s.second.triangles == 0) {
              return s.first.leaves == 1 && s.second.leaves == 1;  // double stars: only P4
            }
            return rad2_diam3_clause(spec).has_value();
          },
      },
      spec);
}

std::vector<FamilySpec> recognize_all(const Graph& g) {
  std::vector<FamilySpec> out;
  const int n = g.order();
  if (n == 0 || !is_connected(g)) return out;
  const int m = g.size();
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  const int max_deg = *std::max_element(deg.begin(), deg.end());
  const auto count_deg = [&](int d) { return static_cast<int>(std::count(deg.begin(), deg.end(), d)); };

  if (2LL * m == static_cast<long long>(n) * (n - 1)) push_unique(out, family::Complete{n});
  if (m == n - 1 && max_deg <= 2) push_unique(out, family::Path{n});
  if (n >= 3 && m == n && count_deg(2) == n) push_unique(out, family::Cycle{n});
  if (n >= 2 && m == n - 1 && max_deg == n - 1) push_unique(out, family::Star{n - 1});
  if (n >= 3 && n % 2 == 1 && max_deg == n - 1 && m == 3 * (n - 1) / 2 && count_deg(2) == n - 1) {
    push_unique(out, family::Friendship{(n - 1) / 2});
  }
  if (n >= 4 && max_deg == n - 1 && m == 2 * (n - 1)) {
    const auto hubs = universal_vertices(g);
    for (Vertex hub : hubs) {
      const auto rim = delete_vertex(g, hub).graph;
      if (rim.size() == rim.order() && is_connected(rim)) {
        bool two_regular = true;
        for (Vertex v = 0; v < rim.order(); ++v) two_regular = two_regular && rim.degree(v) == 2;
        if (two_regular) {
          push_unique(out, family::Wheel{n});
          break;
        }
      }
    }
  }
  if (!is_cactus(g)) return out;

  for (const Edge& e : g.edges()) {
    const std::vector<Vertex> core{e.u, e.v};
    const auto profile = pendant_profile(g, core);
    if (!profile || (*profile)[0].empty() || (*profile)[1].empty()) continue;
    push_unique(out, family::TwoHub{(*profile)[0], (*profile)[1]});
  }

  const auto bd = block_decomposition(g);
  int longest = 0;
  for (const auto& b : bd.blocks)
    if (b.is_cycle()) longest = std::max(longest, b.order());
  if (longest >= 3 && longest <= 5) {
    for (const auto& b : bd.blocks) {
      if (!b.is_cycle() || b.order() != longest) continue;
      if (auto s = as_cycle_cactus(g, b)) push_unique(out, std::move(*s));
    }
  }
  return out;
}

std::optional<FamilySpec> recognize(const Graph& graph) {
  auto all = recognize_all(graph);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace packcrit
