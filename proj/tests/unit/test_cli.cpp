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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "packcrit/cli/cli.hpp"
#include "packcrit/error.hpp"

namespace packcrit::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<const char*> args) {
  args.insert(args.begin(), "packcrit");
  std::ostringstream out, err;
  const int code = run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

TEST(Cli, ChiRho) {
  EXPECT_EQ(invoke({"chirho", "C5"}).out, "4\n");
  EXPECT_EQ(invoke({"chirho", "G1^5(0,2)"}).out, "5\n");
  EXPECT_EQ(invoke({"chirho", "K1,7"}).out, "2\n");
  const Result w = invoke({"chirho", "P4", "--witness"});
  EXPECT_EQ(w.code, kExitOk);
  EXPECT_EQ(w.out.substr(0, 2), "3\n");
  EXPECT_NE(w.out.find("3:"), std::string::npos);
  EXPECT_NE(invoke({"chirho", "C4", "--dot"}).out.find("graph G {"), std::string::npos);
}

TEST(Cli, Critical) {
  EXPECT_EQ(invoke({"critical", "P4"}).out.substr(0, 9), "critical\n");
  const Result w6 = invoke({"critical", "W6"});
  EXPECT_NE(w6.out.find("not critical"), std::string::npos);
  EXPECT_NE(w6.out.find("witness edge"), std::string::npos);
  EXPECT_NE(w6.out.find("after deletion: 5"), std::string::npos);
  EXPECT_EQ(invoke({"critical", "H(0,2;2,0)"}).out.substr(0, 9), "critical\n");
  EXPECT_NE(invoke({"critical", "P5", "--vertex"}).out.find("witness vertex"), std::string::npos);
}

TEST(Cli, CriticalRejectsIsolatedVertices) {
  const Result r = invoke({"critical", "B?"});  // two isolated vertices
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("isolated"), std::string::npos);
}

TEST(Cli, Classify) {
  const Result a = invoke({"classify", "G3^3(1,0;1,0;1,0)"});
  EXPECT_NE(a.out.find("teo4-(v)"), std::string::npos);
  EXPECT_NE(a.out.find("predicted: critical"), std::string::npos);
  EXPECT_NE(invoke({"classify", "C5"}).out.find("theorem: teo3"), std::string::npos);
  const Result c6 = invoke({"classify", "C6"});
  EXPECT_NE(c6.out.find("out of characterized scope (rad 3"), std::string::npos);
  const Result checked = invoke({"classify", "W6", "--check"});
  EXPECT_EQ(checked.code, kExitOk);
  EXPECT_NE(checked.out.find("agree: yes"), std::string::npos);
}

TEST(Cli, GenFormatsAndDiagnostics) {
  const Result edges = invoke({"gen", "G2^4(1,2;2,1)", "--format", "edges"});
  EXPECT_EQ(edges.out.substr(0, 5), "n 13\n");
  const Result t3 = invoke({"gen", "T3"});
  EXPECT_EQ(t3.out[0], 'F');  // graph6 order byte for 7 vertices
  const Result bad = invoke({"gen", "G2^4(1,2)"});
  EXPECT_EQ(bad.code, kExitError);
  EXPECT_NE(bad.err.find("G2^4(1,2)\n ^"), std::string::npos);
}

TEST(Cli, Enumerate) {
  const Result r = invoke({"enumerate", "--cactus", "--rad", "2", "--diam", "2", "--max-n", "6"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
  EXPECT_EQ(invoke({"enumerate", "--max-n", "5", "--min-n", "5", "--count"}).out, "21\n");
  EXPECT_EQ(invoke({"enumerate", "--tree", "--cactus", "--max-n", "4"}).code, kExitError);
  EXPECT_EQ(invoke({"enumerate", "--max-n", "9"}).code, kExitError);  // over the general cap
}

TEST(Cli, EnumerateFromCorpus) {
  const auto path = temp_file("packcrit_corpus.g6", "DQc\nD?{\nBw\n");
  const Result r = invoke({"enumerate", "--from-g6", path.c_str(), "--max-n", "5", "--count"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "3\n");
}

TEST(Cli, InputResolution) {
  const auto edges = temp_file("packcrit_c5.txt", "# five cycle\nn 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  EXPECT_EQ(invoke({"chirho", edges.c_str()}).out, "4\n");
  const auto g6 = temp_file("packcrit_p5.g6", "DQc\n");
  EXPECT_EQ(invoke({"chirho", g6.c_str()}).out, "3\n");
  EXPECT_EQ(invoke({"chirho", "DQc"}).out, "3\n");
  const Result bad = invoke({"chirho", "C5x"});
  EXPECT_EQ(bad.code, kExitError);
  EXPECT_NE(bad.err.find("C5x\n  ^"), std::string::npos);
}

TEST(Cli, VerifyWritesSortedRecords) {
  const auto path = std::filesystem::temp_directory_path() / "packcrit_pro4.jsonl";
  const Result r = invoke({"verify", "pro4", "--max-vertices", "11", "--out", path.c_str(), "--jobs", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("0 disagree"), std::string::npos);
  std::ifstream in(path);
  std::string line, previous;
  int lines = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j.at("theorem"), "pro4");
    EXPECT_TRUE(j.at("agree").get<bool>());
    for (const char* key : {"instance_g6", "spec", "predicted", "oracle", "micros"}) EXPECT_TRUE(j.contains(key));
    const std::string key = j.at("instance_g6").get<std::string>() + " " + j.at("spec").get<std::string>();
    EXPECT_LE(previous, key);
    previous = key;
    ++lines;
  }
  // (k, m) with k + 2m <= 6 and k + m >= 1
  EXPECT_EQ(lines, 15);
}

TEST(Cli, VerifyKnowsEveryId) {
  EXPECT_EQ(sweep_ids().size(), 31u);
  const Result list = invoke({"verify", "--list"});
  EXPECT_NE(list.out.find("cor-haynes"), std::string::npos);
  EXPECT_EQ(invoke({"verify", "nonsense"}).code, kExitError);
}

TEST(Cli, SmallSweepsAgree) {
  for (const char* id : {"pro6", "lemma6", "lemma1", "lem-rad3", "pro2"}) {
    const auto report = run_sweep(id, SweepOptions{std::nullopt, std::nullopt, 1});
    EXPECT_GT(report.records.size(), 0u) << id;
    EXPECT_EQ(report.disagreements(), 0) << id;
  }
}

TEST(Cli, ConfigPrecedence) {
  ::setenv("PACKCRIT_MAX_N", "9", 1);
  EXPECT_EQ(effective_cap(std::nullopt, 14), 9);
  EXPECT_EQ(effective_cap(12, 14), 12);
  ::setenv("PACKCRIT_MAX_N", "bogus", 1);
  EXPECT_THROW(effective_cap(std::nullopt, 14), std::invalid_argument);
  ::unsetenv("PACKCRIT_MAX_N");
  EXPECT_EQ(effective_cap(std::nullopt, 14), 14);
}

}  // namespace
}  // namespace packcrit::cli
