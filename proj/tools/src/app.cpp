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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "packcrit/classify.hpp"
#include "packcrit/cli/cli.hpp"
#include "packcrit/criticality.hpp"
#include "packcrit/enumeration.hpp"
#include "packcrit/error.hpp"
#include "packcrit/families.hpp"
#include "packcrit/graph_io.hpp"
#include "packcrit/packing.hpp"

namespace packcrit::cli {
namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return line.compare(first, 2, "n ") == 0;
  }
  return false;
}

std::string format_graph(const Graph& g, const std::string& format) {
  if (format == "graph6") return emit_graph6(g) + "\n";
  if (format == "edges") return emit_edge_list(g);
  if (format == "dot") return emit_dot(g);
  throw std::invalid_argument("unknown format '" + format + "'");
}

std::string scope_reason(const Graph& g) {
  if (g.order() < 2) return "fewer than two vertices";
  if (!is_connected(g)) return "disconnected";
  const DistanceMatrix d(g);
  std::string why = "rad " + std::to_string(radius(d)) + ", diam " + std::to_string(diameter(d));
  why += is_cactus(g) ? ", cactus" : ", not a cactus";
  if (!is_cactus(g)) why += is_block_graph(g) ? ", block graph" : ", not a block graph";
  return why;
}

void print_verdict(std::ostream& out, const Verdict& v) {
  out << "theorem: " << v.theorem << "\n";
  out << "clause: " << v.clause << "\n";
  out << "predicted: " << (v.predicted_critical ? "critical" : "not critical") << "\n";
  if (v.family) out << "family: " << to_string(*v.family) << "\n";
  if (v.universal_vertex) out << "universal vertex: " << *v.universal_vertex << "\n";
  if (v.leaf) out << "leaf: " << *v.leaf << "\n";
  if (v.alpha_witness) {
    out << "alpha-stable edge: " << v.alpha_witness->u << " " << v.alpha_witness->v << "\n";
  }
  if (!v.central_block.empty()) {
    out << "central block:";
    for (Vertex x : v.central_block) out << ' ' << x;
    out << "\n";
    for (const auto& [x, sub] : v.subclauses) out << "  vertex " << x << ": " << sub << "\n";
  }
  for (const auto& note : v.notes) out << "note: " << note << "\n";
}

}  // namespace

ResolvedGraph resolve_graph(std::string_view source) {
  const std::string text(source);
  std::error_code ec;
  if (!text.empty() && std::filesystem::is_regular_file(text, ec)) {
    const std::string body = read_file(text);
    if (looks_like_edge_list(body)) return {parse_edge_list(body), text, std::nullopt};
    const auto nl = body.find('\n');
    return {parse_graph6(body.substr(0, nl == std::string::npos ? body.size() : nl + 1)), text, std::nullopt};
  }
  try {
    const FamilySpec spec = parse_family_spec(text);
    return {build_graph(spec), to_string(spec), to_string(spec)};
  } catch (const ParseError& spec_error) {
    try {
      return {parse_graph6(text), text, std::nullopt};
    } catch (const ParseError&) {
      // Report against the grammar the input most resembles.
      if (!text.empty() && std::string_view("GHTCPKW").find(text[0]) != std::string_view::npos) throw spec_error;
      throw;
    }
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Packing chromatic numbers and criticality of small graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "packcrit 0.1.0");

  std::string source;
  bool witness = false;
  bool dot = false;
  auto* chirho = app.add_subcommand("chirho", "Print the packing chromatic number");
  chirho->add_option("graph", source, "file, family spec or graph6 string")->required();
  chirho->add_flag("--witness", witness, "print vertex:colour lines for an optimal colouring");
  chirho->add_flag("--dot", dot, "print the optimal colouring as Graphviz DOT");

  bool vertex_mode = false;
  auto* critical = app.add_subcommand("critical", "Decide criticality by single deletions");
  critical->add_option("graph", source, "file, family spec or graph6 string")->required();
  critical->add_flag("--vertex", vertex_mode, "delete vertices instead of edges");

  bool check = false;
  auto* classify_cmd = app.add_subcommand("classify", "Apply the matching structural characterization");
  classify_cmd->add_option("graph", source, "file, family spec or graph6 string")->required();
  classify_cmd->add_flag("--check", check, "also run the exact oracle and report agreement");

  std::string theorem;
  std::optional<int> max_vertices;
  std::optional<int> base_max;
  std::string out_path;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  bool list = false;
  auto* verify = app.add_subcommand("verify", "Sweep a characterization against the exact solvers");
  verify->add_option("theorem", theorem, "sweep id (see --list)");
  verify->add_flag("--list", list, "list sweep ids");
  verify->add_option("--max-vertices", max_vertices, "largest instance order")->check(CLI::Range(1, 64));
  verify->add_option("--base-max", base_max, "largest base graph for hub sweeps")->check(CLI::Range(0, 7));
  verify->add_option("--out", out_path, "write line-delimited JSON records here");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 1024u));

  std::string spec_text;
  std::string format = "graph6";
  auto* gen = app.add_subcommand("gen", "Build a family member");
  gen->add_option("spec", spec_text, "family spec")->required();
  gen->add_option("--format", format, "graph6, edges or dot")->check(CLI::IsMember({"graph6", "edges", "dot"}));

  bool cactus = false, tree = false, block = false, disconnected = false, count_only = false;
  std::optional<int> rad, diam, min_n, max_n;
  std::string from_g6;
  std::string enum_format = "graph6";
  auto* enumerate = app.add_subcommand("enumerate", "List graphs up to isomorphism");
  auto* cls = enumerate->add_option_group("class");
  cls->add_flag("--cactus", cactus, "cacti only");
  cls->add_flag("--tree", tree, "trees only");
  cls->add_flag("--block-graph", block, "block graphs only");
  cls->require_option(0, 1);
  enumerate->add_option("--rad", rad, "exact radius");
  enumerate->add_option("--diam", diam, "exact diameter");
  enumerate->add_option("--min-n", min_n, "smallest order (default 1)");
  enumerate->add_option("--max-n", max_n, "largest order (default PACKCRIT_MAX_N, else the class cap)");
  enumerate->add_flag("--disconnected", disconnected, "allow several components");
  enumerate->add_option("--from-g6", from_g6, "filter this graph6 corpus instead of generating");
  enumerate->add_flag("--count", count_only, "print only the number of graphs");
  enumerate->add_option("--format", enum_format, "graph6 or edges")->check(CLI::IsMember({"graph6", "edges"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    if (chirho->parsed()) {
      const auto g = resolve_graph(source);
      const auto r = chi_rho(g.graph);
      if (dot) {
        out << emit_dot(g.graph, r.witness.colors);
        return kExitOk;
      }
      out << r.value << "\n";
      if (witness)
        for (Vertex v = 0; v < g.graph.order(); ++v) out << v << ":" << r.witness.colors[static_cast<std::size_t>(v)] << "\n";
      return kExitOk;
    }
    if (critical->parsed()) {
      const auto g = resolve_graph(source);
      const auto report = vertex_mode ? is_vertex_critical(g.graph) : is_edge_critical(g.graph);
      out << (report.critical ? "critical" : "not critical") << "\n";
      out << "chi_rho: " << report.base_chi_rho << "\n";
      if (report.witness_edge) {
        const Edge e = *report.witness_edge;
        const auto at = std::find(report.edges.begin(), report.edges.end(), e) - report.edges.begin();
        out << "witness edge: " << e.u << " " << e.v << " (chi_rho after deletion: "
            << report.deletion_values[static_cast<std::size_t>(at)] << ")\n";
      }
      if (report.witness_vertex) {
        out << "witness vertex: " << *report.witness_vertex << " (chi_rho after deletion: "
            << report.deletion_values[static_cast<std::size_t>(*report.witness_vertex)] << ")\n";
      }
      return kExitOk;
    }
    if (classify_cmd->parsed()) {
      const auto g = resolve_graph(source);
      const auto verdict = classify(g.graph);
      if (!verdict) {
        out << "out of characterized scope (" << scope_reason(g.graph) << ")\n";
        return kExitDisagree;
      }
      print_verdict(out, *verdict);
      if (check) {
        const bool oracle = is_edge_critical(g.graph).critical;
        out << "oracle: " << (oracle ? "critical" : "not critical") << "\n";
        out << "agree: " << (oracle == verdict->predicted_critical ? "yes" : "no") << "\n";
        return oracle == verdict->predicted_critical ? kExitOk : kExitDisagree;
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      if (list) {
        for (const auto& id : sweep_ids()) out << id << "\n";
        return kExitOk;
      }
      if (theorem.empty()) throw std::invalid_argument("verify needs a theorem id (see --list)");
      SweepOptions options{max_vertices, base_max, jobs};
      const auto report = run_sweep(theorem, options);
      if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + out_path);
        file << to_jsonl(report);
      }
      out << summary(report);
      return report.disagreements() == 0 ? kExitOk : kExitDisagree;
    }
    if (gen->parsed()) {
      FamilySpec spec;
      try {
        spec = parse_family_spec(spec_text);
      } catch (const ParseError& e) {
        err << caret_diagnostic(spec_text, e.position(), e.what()) << "\n";
        return kExitError;
      }
      out << format_graph(build_graph(spec), format);
      return kExitOk;
    }
    if (enumerate->parsed()) {
      EnumerationFilter filter;
      filter.graph_class = cactus ? GraphClass::kCactus
                           : tree ? GraphClass::kTree
                           : block ? GraphClass::kBlockGraph
                                   : GraphClass::kAll;
      filter.connected = !disconnected;
      filter.radius = rad;
      filter.diameter = diam;
      filter.min_n = min_n.value_or(1);
      filter.max_n = effective_cap(max_n, order_cap(filter));
      std::vector<Graph> graphs;
      if (!from_g6.empty()) {
        std::ifstream in(from_g6);
        if (!in) throw std::runtime_error("cannot read " + from_g6);
        std::vector<Graph> corpus;
        std::string line;
        while (std::getline(in, line))
          if (!line.empty()) corpus.push_back(parse_graph6(line));
        graphs = filter_corpus(corpus, filter);
      } else {
        graphs = enumerate_graphs(filter);
      }
      if (count_only) {
        out << graphs.size() << "\n";
        return kExitOk;
      }
      for (const Graph& g : graphs) out << format_graph(g, enum_format);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    const std::string& shown = source.empty() ? spec_text : source;
    err << "error: " << e.what() << "\n" << caret_diagnostic(shown, e.position(), "here") << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace packcrit::cli
