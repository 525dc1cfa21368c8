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

// Theorem-verification sweeps: each sweep lists instances, states what the
// characterization predicts for each, and compares that with the exact
// solvers.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "json.hpp"
#include "packcrit/classify.hpp"
#include "packcrit/cli/cli.hpp"
#include "packcrit/criticality.hpp"
#include "packcrit/enumeration.hpp"
#include "packcrit/error.hpp"
#include "packcrit/families.hpp"
#include "packcrit/graph_io.hpp"
#include "packcrit/independence.hpp"
#include "packcrit/packing.hpp"

namespace packcrit::cli {
namespace {

struct Outcome {
  std::string predicted;
  std::string oracle;
  bool agree = false;
};

struct Instance {
  Graph graph;
  std::string spec;
  std::function<Outcome(const Graph&)> check;
};

struct Plan {
  std::string range;
  std::vector<Instance> instances;
  std::vector<std::string> exclusions;
};

const char* yes_no(bool critical) { return critical ? "critical" : "not critical"; }

// ---- instance sources ----

void attachments(int q, int budget, std::vector<Attachment>& cur, std::vector<std::vector<Attachment>>& out) {
  if (static_cast<int>(cur.size()) == q) {
    out.push_back(cur);
    return;
  }
  for (int m = 0; 2 * m <= budget; ++m) {
    for (int k = 0; k + 2 * m <= budget; ++k) {
      if (k + m == 0) continue;
      // leave room for the remaining cut vertices (one vertex each at least)
      if (budget - k - 2 * m < q - static_cast<int>(cur.size()) - 1) continue;
      cur.push_back({k, m});
      attachments(q, budget - k - 2 * m, cur, out);
      cur.pop_back();
    }
  }
}

std::vector<FamilySpec> cycle_cacti(int r, int q, int max_n) {
  std::vector<std::vector<Attachment>> lists;
  std::vector<Attachment> cur;
  if (max_n - r >= q) attachments(q, max_n - r, cur, lists);
  std::vector<FamilySpec> out;
  for (auto& list : lists) out.emplace_back(family::CycleCactus{r, std::move(list)});
  return out;
}

std::vector<FamilySpec> two_hubs(int max_n) {
  std::vector<std::vector<Attachment>> lists;
  std::vector<Attachment> cur;
  if (max_n - 2 >= 2) attachments(2, max_n - 2, cur, lists);
  std::vector<FamilySpec> out;
  for (auto& list : lists) out.emplace_back(family::TwoHub{list[0], list[1]});
  return out;
}

std::vector<Graph> enumerated(int min_n, int max_n, GraphClass c, std::optional<int> rad, std::optional<int> diam,
                              bool connected = true) {
  EnumerationFilter f;
  f.min_n = min_n;
  f.max_n = max_n;
  f.graph_class = c;
  f.radius = rad;
  f.diameter = diam;
  f.connected = connected;
  return enumerate_graphs(f);
}

// Graphs of radius one on 3..max_n vertices, as a hub over every graph on
// one vertex fewer. Each class arises once: if u and w are both universal,
// G - u and G - w are isomorphic.
std::vector<Graph> radius_one(int max_n) {
  std::vector<Graph> out;
  for (const Graph& h : enumerated(2, max_n - 1, GraphClass::kAll, std::nullopt, std::nullopt, false)) {
    out.push_back(add_universal_vertex(h));
  }
  return out;
}

// ---- checks ----

Outcome chi_against(int predicted, const Graph& g) {
  const auto r = chi_rho(g);
  const bool witness_ok = verify_packing_coloring(g, r.witness).ok;
  return {std::to_string(predicted), std::to_string(r.value) + (witness_ok ? "" : " (bad witness)"),
          predicted == r.value && witness_ok};
}

Outcome critical_against(bool predicted, const Graph& g) {
  const bool oracle = is_edge_critical(g).critical;
  return {yes_no(predicted), yes_no(oracle), predicted == oracle};
}

Instance formula_instance(const FamilySpec& spec) {
  const int predicted = *closed_form_chi_rho(spec);
  return {build_graph(spec), to_string(spec), [predicted](const Graph& g) { return chi_against(predicted, g); }};
}

Instance critical_instance(const FamilySpec& spec, bool predicted) {
  return {build_graph(spec), to_string(spec), [predicted](const Graph& g) { return critical_against(predicted, g); }};
}

Instance verdict_instance(const Graph& g, const std::string& spec, std::function<Verdict(const Graph&)> decide) {
  return {g, spec, [decide](const Graph& h) {
            const Verdict v = decide(h);
            const bool oracle = is_edge_critical(h).critical;
            return Outcome{std::string(yes_no(v.predicted_critical)) + " [" + v.clause + "]", yes_no(oracle),
                           v.predicted_critical == oracle};
          }};
}

bool rad2_diam3(const Graph& g) {
  const DistanceMatrix d(g);
  return radius(d) == 2 && diameter(d) == 3;
}

// Family members for a criticality sweep; members whose built graph misses
// radius 2 / diameter 3 are reported instead of checked.
void add_critical_members(Plan& plan, const std::vector<FamilySpec>& specs,
                          const std::function<std::optional<bool>(const FamilySpec&)>& predict) {
  for (const auto& spec : specs) {
    const auto p = predict(spec);
    if (!p) continue;
    if (!rad2_diam3(build_graph(spec))) {
      plan.exclusions.push_back(to_string(spec));
      continue;
    }
    plan.instances.push_back(critical_instance(spec, *p));
  }
}

std::string upto(int n) { return "|V| <= " + std::to_string(n); }

using Builder = std::function<Plan(const SweepOptions&)>;

int cap(const SweepOptions& o, int fallback) { return effective_cap(o.max_vertices, fallback); }

std::vector<FamilySpec> filtered(std::vector<FamilySpec> specs, const std::function<bool(const std::vector<Attachment>&)>& keep) {
  std::vector<FamilySpec> out;
  for (auto& s : specs) {
    const auto& a = std::get<family::CycleCactus>(s).attachments;
    if (keep(a)) out.push_back(std::move(s));
  }
  return out;
}

Plan formula_sweep(int r, int q, int n) {
  Plan plan{upto(n), {}, {}};
  for (const auto& spec : cycle_cacti(r, q, n)) plan.instances.push_back(formula_instance(spec));
  return plan;
}

Plan closed_critical_sweep(std::vector<FamilySpec> specs, int n) {
  Plan plan{upto(n), {}, {}};
  add_critical_members(plan, specs, [](const FamilySpec& s) { return closed_form_critical(s); });
  return plan;
}

Plan never_critical_sweep(std::vector<FamilySpec> specs, int n) {
  Plan plan{upto(n), {}, {}};
  add_critical_members(plan, specs, [](const FamilySpec&) { return std::optional<bool>(false); });
  return plan;
}

const std::map<std::string, Builder>& registry() {
  static const std::map<std::string, Builder> table{
      {"pro4", [](const SweepOptions& o) { return formula_sweep(5, 1, cap(o, 14)); }},
      {"pro8", [](const SweepOptions& o) { return formula_sweep(5, 2, cap(o, 14)); }},
      {"pro10", [](const SweepOptions& o) { return formula_sweep(4, 1, cap(o, 14)); }},
      {"pro12", [](const SweepOptions& o) { return formula_sweep(4, 2, cap(o, 14)); }},
      {"pro5",
       [](const SweepOptions& o) {
         const int n = cap(o, 12);
         return never_critical_sweep(filtered(cycle_cacti(5, 1, n), [](const auto& a) { return a[0].leaves > 0; }), n);
       }},
      {"pro6",
       [](const SweepOptions&) {
         return never_critical_sweep({family::CycleCactus{5, {{0, 1}}}}, 7);
       }},
      {"pro7", [](const SweepOptions& o) { return closed_critical_sweep(cycle_cacti(5, 1, cap(o, 12)), cap(o, 12)); }},
      {"pro9", [](const SweepOptions& o) { return never_critical_sweep(cycle_cacti(5, 2, cap(o, 12)), cap(o, 12)); }},
      {"pro11", [](const SweepOptions& o) { return never_critical_sweep(cycle_cacti(4, 1, cap(o, 12)), cap(o, 12)); }},
      {"pro13", [](const SweepOptions& o) { return closed_critical_sweep(cycle_cacti(4, 2, cap(o, 12)), cap(o, 12)); }},
      {"pro15",
       [](const SweepOptions& o) {
         const int n = cap(o, 12);
         return never_critical_sweep(filtered(cycle_cacti(4, 2, n),
                                              [](const auto& a) {
                                                return a[0].triangles + a[1].triangles == 0 &&
                                                       a[0].leaves + a[1].leaves >= 3;
                                              }),
                                     n);
       }},
      {"pro16",
       [](const SweepOptions& o) {
         const int n = cap(o, 12);
         return never_critical_sweep(filtered(cycle_cacti(4, 2, n),
                                              [](const auto& a) {
                                                return a[0].triangles + a[1].triangles >= 1 &&
                                                       a[0].leaves + a[1].leaves >= 1;
                                              }),
                                     n);
       }},
      {"lemma5",
       [](const SweepOptions& o) {
         const int n = cap(o, 13);
         Plan plan{upto(n), {}, {}};
         for (int t = 1; 2 * t + 1 <= n; ++t) plan.instances.push_back(formula_instance(family::Friendship{t}));
         return plan;
       }},
      {"lemma6",
       [](const SweepOptions&) {
         Plan plan{"G2^4(1,0;1,0)", {}, {}};
         const FamilySpec spec = family::CycleCactus{4, {{1, 0}, {1, 0}}};
         plan.instances.push_back({build_graph(spec), to_string(spec), [](const Graph& g) {
                                     const auto r = is_edge_critical(g);
                                     const std::string got = std::to_string(r.base_chi_rho) + ", " + yes_no(r.critical);
                                     return Outcome{"4, critical", got, r.base_chi_rho == 4 && r.critical};
                                   }});
         return plan;
       }},
      {"lemma7",
       [](const SweepOptions& o) {
         const int n = cap(o, 13);
         Plan plan{upto(n) + ", m1 >= 1, k2 >= 2, m2 = 0", {}, {}};
         for (const auto& spec : two_hubs(n)) {
           const auto& h = std::get<family::TwoHub>(spec);
           if (h.first.triangles < 1 || h.second.leaves < 2 || h.second.triangles != 0) continue;
           plan.instances.push_back({build_graph(spec), to_string(spec), [m1 = h.first.triangles](const Graph& g) {
                                       const int bound = g.order() - independence_number(g) + 1;
                                       Outcome out = chi_against(m1 + 3, g);
                                       out.predicted += " = |V|-alpha+1 = " + std::to_string(bound);
                                       out.agree = out.agree && bound == m1 + 3;
                                       return out;
                                     }});
         }
         return plan;
       }},
      {"teo1",
       [](const SweepOptions& o) {
         const int n = cap(o, 10);
         Plan plan{upto(n) + " plus the two smallest members of each clause", {}, {}};
         std::vector<FamilySpec> specs = cycle_cacti(3, 3, n);
         for (auto& h : two_hubs(n)) {
           const auto& th = std::get<family::TwoHub>(h);
           if (th.first.triangles + th.second.triangles >= 1) specs.push_back(h);
         }
         const std::vector<std::string> smallest{
             "G3^3(1,0;1,0;1,0)", "G3^3(2,0;2,0;0,1)", "G3^3(0,2;0,2;0,2)", "G3^3(0,2;0,2;0,3)",
             "G3^3(0,2;0,2;2,0)", "G3^3(0,2;0,3;2,0)", "G3^3(0,2;2,0;2,0)", "G3^3(0,3;2,0;2,0)",
             "H(2,0;0,1)",        "H(0,2;0,2)",        "H(0,2;0,3)",        "H(0,2;2,0)",
             "H(0,3;2,0)"};
         for (const auto& s : smallest) {
           const FamilySpec spec = parse_family_spec(s);
           if (std::find(specs.begin(), specs.end(), spec) == specs.end()) specs.push_back(spec);
         }
         add_critical_members(plan, specs, [](const FamilySpec& s) { return closed_form_critical(s); });
         return plan;
       }},
      {"teo3",
       [](const SweepOptions& o) {
         const int n = cap(o, 10);
         Plan plan{upto(n) + ", cacti, rad 2, diam 2", {}, {}};
         for (const Graph& g : enumerated(1, n, GraphClass::kCactus, 2, 2))
           plan.instances.push_back(verdict_instance(g, "", classify_cactus_rad2_diam2));
         return plan;
       }},
      {"teo4",
       [](const SweepOptions& o) {
         const int n = cap(o, 10);
         Plan plan{upto(n) + ", cacti, rad 2, diam 3", {}, {}};
         for (const Graph& g : enumerated(1, n, GraphClass::kCactus, 2, 3))
           plan.instances.push_back(verdict_instance(g, "", classify_cactus_rad2_diam3));
         return plan;
       }},
      {"lemma8",
       [](const SweepOptions& o) {
         const int n = cap(o, 9);
         Plan plan{upto(n) + ", block graphs, diam 3", {}, {}};
         for (const Graph& g : enumerated(1, n, GraphClass::kBlockGraph, std::nullopt, 3))
           plan.instances.push_back(verdict_instance(g, "", block_graph_diam3_criterion));
         return plan;
       }},
      {"thm12",
       [](const SweepOptions& o) {
         const int base = o.base_max.value_or(6);
         Plan plan{"hub + H, |V(H)| <= " + std::to_string(base), {}, {}};
         for (const Graph& h : enumerated(1, base, GraphClass::kAll, std::nullopt, std::nullopt, false))
           plan.instances.push_back(verdict_instance(add_universal_vertex(h), "", classify_radius1));
         return plan;
       }},
      {"pro14",
       [](const SweepOptions& o) {
         const int n = cap(o, 8);
         Plan plan{upto(n) + ", radius 1, |V| >= 3", {}, {}};
         for (const Graph& g : radius_one(n)) {
           plan.instances.push_back({g, "", [](const Graph& h) {
                                       const bool leaf = has_leaf_violation(h).has_value();
                                       const bool critical = is_edge_critical(h).critical;
                                       return Outcome{leaf ? "not critical (leaf)" : "no claim", yes_no(critical),
                                                      !(leaf && critical)};
                                     }});
         }
         return plan;
       }},
      {"cor1",
       [](const SweepOptions& o) {
         const int n = cap(o, 8);
         Plan plan{upto(n) + ", radius 1, |V| >= 3", {}, {}};
         for (const Graph& g : radius_one(n)) {
           plan.instances.push_back({g, "", [](const Graph& h) {
                                       if (!is_edge_critical(h).critical) return Outcome{"no claim", "not critical", true};
                                       bool all = true;
                                       for (Vertex u : universal_vertices(h)) {
                                         const Graph rest = delete_vertex(h, u).graph;
                                         for (const auto& part : components(rest))
                                           all = all && is_alpha_critical(induced_subgraph(rest, part).graph).critical;
                                       }
                                       return Outcome{"components of G-u alpha-critical",
                                                      all ? "alpha-critical" : "some component not alpha-critical", all};
                                     }});
         }
         return plan;
       }},
      {"cor-haynes",
       [](const SweepOptions& o) {
         const int n = cap(o, 7);
         Plan plan{upto(n) + ", connected, alpha-critical", {}, {}};
         for (const Graph& g : enumerated(2, n, GraphClass::kAll, std::nullopt, std::nullopt)) {
           if (!is_alpha_critical(g).critical) continue;
           plan.instances.push_back({g, "", [](const Graph& h) {
                                       int missing = 0;
                                       for (Vertex v = 0; v < h.order(); ++v) {
                                         const std::vector<Vertex> avoid{v};
                                         missing += !mis_avoiding(h, avoid).has_value();
                                       }
                                       return Outcome{"every vertex avoided by some maximum independent set",
                                                      std::to_string(missing) + " vertices uncovered", missing == 0};
                                     }});
         }
         return plan;
       }},
      {"lem-rad3",
       [](const SweepOptions& o) {
         const int n = cap(o, 7);
         Plan plan{"C7, C9, C11 and connected alpha-critical graphs of radius >= 3, " + upto(n), {}, {}};
         const auto check = [](const Graph& h) {
           const bool ok = check_lemma_rad3(h);
           return Outcome{"distance-3 pairs avoidable", ok ? "avoidable" : "violated", ok};
         };
         for (int c : {7, 9, 11}) plan.instances.push_back({build_graph(family::Cycle{c}), "C" + std::to_string(c), check});
         for (const Graph& g : enumerated(2, n, GraphClass::kAll, std::nullopt, std::nullopt)) {
           if (radius(g) >= 3 && is_alpha_critical(g).critical) plan.instances.push_back({g, "", check});
         }
         return plan;
       }},
      {"teo2",
       [](const SweepOptions& o) {
         const int n = cap(o, 7);
         Plan plan{upto(n) + ", connected", {}, {}};
         for (const Graph& g : enumerated(1, n, GraphClass::kAll, std::nullopt, std::nullopt)) {
           plan.instances.push_back({g, "", [](const Graph& h) {
                                       const bool haynes = haynes_check(h);
                                       const bool direct = is_alpha_critical(h).critical;
                                       return Outcome{haynes ? "alpha-critical" : "not alpha-critical",
                                                      direct ? "alpha-critical" : "not alpha-critical", haynes == direct};
                                     }});
         }
         return plan;
       }},
      {"lemma4",
       [](const SweepOptions& o) {
         const int n = cap(o, 7);
         Plan plan{upto(n) + ", connected", {}, {}};
         for (const Graph& g : enumerated(1, n, GraphClass::kAll, std::nullopt, std::nullopt)) {
           plan.instances.push_back({g, "", [](const Graph& h) {
                                       const int bound = h.order() - independence_number(h) + 1;
                                       const bool tight = h.order() > 1 && diameter(h) == 2;
                                       const int value = chi_rho(h).value;
                                       return Outcome{(tight ? "= " : "<= ") + std::to_string(bound), std::to_string(value),
                                                      tight ? value == bound : value <= bound};
                                     }});
         }
         return plan;
       }},
      {"obsv1",
       [](const SweepOptions& o) {
         const int n = cap(o, 8);
         Plan plan{upto(n) + ", connected, every bridge", {}, {}};
         for (const Graph& g : enumerated(2, n, GraphClass::kAll, std::nullopt, std::nullopt)) {
           if (bridges(g).empty()) continue;
           plan.instances.push_back({g, "", [](const Graph& h) {
                                       const int diam = diameter(h);
                                       int worst = 0;
                                       for (const Edge& e : bridges(h)) {
                                         const Graph cut = delete_edge(h, e);
                                         for (const auto& part : components(cut))
                                           worst = std::max(worst, diameter(induced_subgraph(cut, part).graph));
                                       }
                                       return Outcome{"<= " + std::to_string(diam), std::to_string(worst), worst <= diam};
                                     }});
         }
         return plan;
       }},
      {"lemma1",
       [](const SweepOptions& o) {
         const int n = cap(o, 12);
         Plan plan{"C3 .. C" + std::to_string(n), {}, {}};
         for (int c = 3; c <= n; ++c) {
           plan.instances.push_back({build_graph(family::Cycle{c}), "C" + std::to_string(c), [c](const Graph& h) {
                                       const std::string got =
                                           std::to_string(radius(h)) + "/" + std::to_string(diameter(h));
                                       const std::string want = std::to_string(c / 2) + "/" + std::to_string(c / 2);
                                       return Outcome{want, got, want == got};
                                     }});
         }
         return plan;
       }},
      {"lem-mainblock",
       [](const SweepOptions& o) {
         const int n = cap(o, 10);
         Plan plan{upto(n) + ", cacti, rad 2", {}, {}};
         for (const Graph& g : enumerated(1, n, GraphClass::kCactus, 2, std::nullopt)) {
           plan.instances.push_back({g, "", [](const Graph& h) {
                                       int longest = 0;
                                       for (const Block& b : block_decomposition(h).blocks)
                                         if (b.is_cycle()) longest = std::max(longest, b.order());
                                       return Outcome{"longest cycle <= 5", std::to_string(longest), longest <= 5};
                                     }});
         }
         return plan;
       }},
      {"pro2",
       [](const SweepOptions& o) {
         const int n = cap(o, 10);
         Plan plan{upto(n) + ", cacti, rad 2, diam 2", {}, {}};
         for (const Graph& g : enumerated(1, n, GraphClass::kCactus, 2, 2)) {
           plan.instances.push_back({g, "", [](const Graph& h) {
                                       const bool c4 = is_isomorphic(h, build_graph(family::Cycle{4}));
                                       const bool c5 = is_isomorphic(h, build_graph(family::Cycle{5}));
                                       return Outcome{"C4 or C5", c4 ? "C4" : c5 ? "C5" : "other", c4 || c5};
                                     }});
         }
         return plan;
       }},
      {"pro3",
       [](const SweepOptions& o) {
         const int n = cap(o, 10);
         Plan plan{upto(n) + ", trees, diam 3", {}, {}};
         for (const Graph& g : enumerated(1, n, GraphClass::kTree, std::nullopt, 3)) {
           const bool p4 = g.order() == 4;
           plan.instances.push_back(
               {g, p4 ? "P4" : "", [p4](const Graph& h) { return critical_against(p4, h); }});
         }
         return plan;
       }},
  };
  return table;
}

}  // namespace

int VerificationReport::agreements() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const SweepRecord& r) { return r.agree; }));
}

int VerificationReport::disagreements() const { return static_cast<int>(records.size()) - agreements(); }

const std::vector<std::string>& sweep_ids() {
  static const std::vector<std::string> ids{
      "pro4",  "pro5",   "pro6",   "pro7",   "pro8",   "pro9", "pro10", "pro11", "pro12",      "pro13",
      "pro15", "pro16",  "lemma4", "lemma5", "lemma6", "lemma7", "lemma8", "teo1", "teo3",      "teo4",
      "thm12", "pro14",  "cor1",   "cor-haynes", "lem-rad3", "teo2", "obsv1", "lemma1", "lem-mainblock", "pro2",
      "pro3"};
  return ids;
}

int effective_cap(std::optional<int> flag, int fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("PACKCRIT_MAX_N"); env && *env) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value < 1 || value > 64) throw std::invalid_argument("PACKCRIT_MAX_N must be an integer in [1, 64]");
    return static_cast<int>(value);
  }
  return fallback;
}

VerificationReport run_sweep(const std::string& id, const SweepOptions& options) {
  const auto& table = registry();
  const auto found = table.find(id);
  if (found == table.end()) throw std::invalid_argument("unknown theorem id '" + id + "'");
  const auto start = std::chrono::steady_clock::now();
  Plan plan = found->second(options);

  VerificationReport report;
  report.theorem = id;
  report.range = plan.range;
  report.excluded = static_cast<int>(plan.exclusions.size());
  report.exclusions = plan.exclusions;
  report.records.resize(plan.instances.size());

  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < plan.instances.size(); i = next++) {
      const Instance& inst = plan.instances[i];
      const auto t0 = std::chrono::steady_clock::now();
      const Outcome out = inst.check(inst.graph);
      const auto t1 = std::chrono::steady_clock::now();
      report.records[i] = SweepRecord{id,        emit_graph6(inst.graph), inst.spec, out.predicted, out.oracle, out.agree,
                                      std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count()};
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(plan.instances.size())));
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_lock;
  for (unsigned w = 1; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        work();
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  try {
    work();
  } catch (...) {
    const std::lock_guard<std::mutex> lock(failure_lock);
    if (!failure) failure = std::current_exception();
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::sort(report.records.begin(), report.records.end(), [](const SweepRecord& a, const SweepRecord& b) {
    return std::tie(a.instance_g6, a.spec) < std::tie(b.instance_g6, b.spec);
  });
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string to_jsonl(const VerificationReport& report) {
  std::string out;
  for (const auto& r : report.records) {
    const nlohmann::ordered_json line{{"theorem", r.theorem}, {"instance_g6", r.instance_g6}, {"spec", r.spec},
                                      {"predicted", r.predicted}, {"oracle", r.oracle},   {"agree", r.agree},
                                      {"micros", r.micros}};
    out += line.dump();
    out += '\n';
  }
  return out;
}

std::string summary(const VerificationReport& report) {
  std::ostringstream s;
  s << "verify " << report.theorem << ": " << report.records.size() << " instances, " << report.agreements()
    << " agree, " << report.disagreements() << " disagree";
  if (report.excluded) s << ", " << report.excluded << " excluded";
  s << " (" << report.range << "; " << report.seconds << " s)\n";
  for (const auto& name : report.exclusions) s << "  excluded (radius/diameter hypotheses fail): " << name << '\n';
  for (const auto& r : report.records) {
    if (r.agree) continue;
    s << "  DISAGREE " << (r.spec.empty() ? r.instance_g6 : r.spec + " " + r.instance_g6) << ": predicted "
      << r.predicted << ", oracle " << r.oracle << '\n';
  }
  return s.str();
}

}  // namespace packcrit::cli
