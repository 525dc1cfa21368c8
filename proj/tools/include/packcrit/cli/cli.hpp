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

// Library behind the packcrit command-line tool, split out so the commands
// can be driven from tests without spawning processes.

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "packcrit/graph.hpp"

namespace packcrit::cli {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagree = 1;  // also: "not in scope" for classify
inline constexpr int kExitError = 2;

/// A graph read from the command line, with a human label for messages.
struct ResolvedGraph {
  Graph graph;
  std::string label;
  /// Canonical family spec text when the source was a spec.
  std::optional<std::string> spec;
};

/// Resolves a graph source: an existing file (edge list if its first
/// meaningful line starts with "n ", graph6 otherwise), then a family spec,
/// then a graph6 string. Throws ParseError or std::runtime_error.
ResolvedGraph resolve_graph(std::string_view source);

/// Size cap for sweeps: flag value if given, else PACKCRIT_MAX_N, else the
/// sweep default.
int effective_cap(std::optional<int> flag, int fallback);

struct SweepOptions {
  std::optional<int> max_vertices;
  std::optional<int> base_max;
  unsigned jobs = 1;
};

struct SweepRecord {
  std::string theorem;
  std::string instance_g6;
  std::string spec;
  std::string predicted;
  std::string oracle;
  bool agree = false;
  std::int64_t micros = 0;
};

struct VerificationReport {
  std::string theorem;
  std::string range;
  std::vector<SweepRecord> records;  // sorted by (instance_g6, spec)
  int excluded = 0;                  // members failing the sweep's metric hypotheses
  std::vector<std::string> exclusions;
  double seconds = 0;

  int agreements() const;
  int disagreements() const;
};

/// Known sweep identifiers, in a fixed order.
const std::vector<std::string>& sweep_ids();

/// Runs one sweep. Throws std::invalid_argument for unknown ids and
/// PreconditionError when a range exceeds the enumeration caps.
VerificationReport run_sweep(const std::string& id, const SweepOptions& options);

/// One JSON object per line, in record order.
std::string to_jsonl(const VerificationReport& report);
std::string summary(const VerificationReport& report);

/// Entry point used by main(); returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace packcrit::cli
