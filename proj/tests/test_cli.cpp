// Copyright 2026 The crystal-forge Authors
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

// Drives the installed command-line binary as a subprocess.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"

namespace {

struct Result {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Result run(const std::string& args) {
  const auto err_path =
      std::filesystem::path(::testing::TempDir()) / "crystal_forge_stderr.txt";
  const std::string command = std::string(CRYSTAL_FORGE_CLI) + " " + args +
                              " 2>" + err_path.string();
  Result r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.err = slurp(err_path);
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::path(::testing::TempDir()) / name;
  std::ofstream(path) << text;
  return path.string();
}

TEST(CliTest, MultiplicityExample) {
  const Result r = run("mult --diagram A2 --target 1,1 --factors 1,1 1,1");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "2\n");
}

TEST(CliTest, CrystalDot) {
  const Result r = run("crystal --diagram A2 --hw 1,0 --format dot");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
  int nodes = 0;
  for (std::size_t pos = 0; (pos = r.out.find("[label=\"(", pos)) != std::string::npos;
       ++pos) {
    ++nodes;
  }
  EXPECT_EQ(nodes, 3);
}

TEST(CliTest, NonDominantWeight) {
  for (const char* args : {"crystal --diagram A2 --hw -1,0",
                           "crystal --diagram A2 --hw=-1,0"}) {
    const Result r = run(args);
    EXPECT_EQ(r.status, 1) << args;
    EXPECT_NE(r.err.find("dominant"), std::string::npos) << r.err;
    EXPECT_TRUE(r.out.empty());
  }
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("crystal --diagram A2 --hw 1,0 --bogus").status, 1);
  EXPECT_EQ(run("crystal --diagram Q7 --hw 1,0").status, 1);
  EXPECT_EQ(run("crystal --diagram A2 --hw 1,0 --format csv").status, 1);
  EXPECT_EQ(run("crystal --diagram A2 --hw 1,0,0").status, 1);
  const Result help = run("--help");
  EXPECT_EQ(help.status, 0);
  EXPECT_NE(help.out.find("0=red"), std::string::npos);
}

TEST(CliTest, ResourceCapExitsTwoWithoutPartialOutput) {
  const Result r =
      run("crystal --diagram E8 --hw 0,0,0,0,0,0,0,1 --max-vertices 100");
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(CliTest, DeterministicOutput) {
  const std::string args =
      "decompose --diagram D4 --factors 1,0,0,0 0,0,1,0 --format json";
  const Result a = run(args);
  const Result b = run(args);
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["schema"], "crystal-forge/1");
  EXPECT_EQ(doc["summands"].size(), 2u);
}

TEST(CliTest, CrystalAndTensorJson) {
  const Result c = run("crystal --diagram A1 --hw 2 --paths");
  ASSERT_EQ(c.status, 0);
  const auto doc = nlohmann::json::parse(c.out);
  EXPECT_EQ(doc["vertices"].size(), 3u);
  const Result t = run("tensor --diagram A1 --factors 1 1");
  ASSERT_EQ(t.status, 0);
  EXPECT_EQ(nlohmann::json::parse(t.out)["vertices"].size(), 4u);
  const Result table = run("tensor --diagram A1 --factors 1 1 --format table");
  EXPECT_EQ(table.status, 0);
  EXPECT_FALSE(table.out.empty());
}

TEST(CliTest, Branch) {
  const Result r = run("branch --diagram A2 --hw 1,0 --levi 0");
  ASSERT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["summands"],
            nlohmann::json::parse(R"([{"weight":[1],"mult":1},{"weight":[0],"mult":1}])"));
  EXPECT_EQ(run("branch --diagram A2 --hw 1,0 --levi 1,0").status, 1);
}

TEST(CliTest, Dims) {
  const Result r = run(
      "dims --diagram A2 --d 2,2 --v 1,1 --d-tuple 2,0 0,2 --v-tuple 1,0 0,1");
  ASSERT_EQ(r.status, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.dump().find("\"dimT\":5") != std::string::npos, true) << r.out;
  const Result bad = run("dims --diagram A2 --d 2,2 --v 1,1 --d-tuple 1,0 --v-tuple 1,0");
  EXPECT_EQ(bad.status, 1);
  EXPECT_TRUE(bad.out.empty());
}

TEST(CliTest, Sl2) {
  const Result range = run("sl2 range --d1 2 --v1 0 --d2 2 --v2 0");
  ASSERT_EQ(range.status, 0);
  EXPECT_EQ(nlohmann::json::parse(range.out)["v0"],
            nlohmann::json::parse("[0,1,2]"));
  const Result tau = run("sl2 tau2 --d1 2 --v1 0 --u1 1 --d2 2 --v2 0 --u2 1");
  ASSERT_EQ(tau.status, 0);
  const auto doc = nlohmann::json::parse(tau.out);
  EXPECT_EQ(doc["v0"], 1);
  EXPECT_EQ(doc["u"], 2);
  EXPECT_EQ(run("sl2 nonempty --d1 2 --v1 0 --d2 2 --v2 0 --v 3").out, "false\n");
  EXPECT_EQ(run("sl2 tau2 --d1 2 --v1 1 --u1 0 --d2 2 --v2 0 --u2 0").status, 1);
  const Result crystal = run("sl2 crystal --d 3 --v0 1");
  ASSERT_EQ(crystal.status, 0);
  EXPECT_EQ(nlohmann::json::parse(crystal.out)["vertices"].size(), 2u);
}

TEST(CliTest, Adhm) {
  const std::string datum = write_temp("stratum.json", R"({
    "diagram": "A1", "d": [2], "v": [1],
    "p": [[[0, 1]]], "q": [[[1], [0]]],
    "flag": [[[[1, 0]]], [[[1, 0], [0, 1]]]]
  })");
  const Result check = run("adhm check " + datum);
  ASSERT_EQ(check.status, 0) << check.err;
  const auto c = nlohmann::json::parse(check.out);
  EXPECT_EQ(c["preprojective"], true);
  EXPECT_EQ(c["stable"], true);
  const Result stratum = run("adhm stratum " + datum);
  ASSERT_EQ(stratum.status, 0) << stratum.err;
  const auto s = nlohmann::json::parse(stratum.out);
  EXPECT_EQ(s["member"], true);
  EXPECT_EQ(s["v"], nlohmann::json::parse("[[0],[0]]"));
  EXPECT_EQ(s["vt"], nlohmann::json::parse("[[0],[1]]"));

  const std::string broken = write_temp("broken.json", "{ not json");
  const Result bad = run("adhm check " + broken);
  EXPECT_EQ(bad.status, 1);
  EXPECT_TRUE(bad.out.empty());
  EXPECT_EQ(run("adhm check /nonexistent/file.json").status, 1);
}

}  // namespace
