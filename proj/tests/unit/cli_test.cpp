/*
 * Copyright 2026 The semilin Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Runs the installed command line tool and checks exit codes and output.

#include <gtest/gtest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
};

std::string data(const std::string& name) { return std::string(SEMILIN_TEST_DATA) + "/" + name; }

Run run(const std::string& args) {
  const fs::path out = fs::temp_directory_path() / ("semilin_cli_" + std::to_string(::getpid()) + ".out");
  const std::string cmd = std::string(SEMILIN_CLI) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  fs::remove(out);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, buf.str()};
}

TEST(Cli, ValidateOk) {
  const auto r = run("validate " + data("line3.json") + " --action " + data("line3_shift.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["report"]["ok"].get<bool>());
}

TEST(Cli, ValidateViolation) { EXPECT_EQ(run("validate " + data("not_metric.json")).code, 1); }

TEST(Cli, OrbitBudget) {
  const auto r = run("orbit " + data("integers.json") + " " + data("integer_shift.json") + " 0 --budget 100");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(nlohmann::json::parse(r.out)["status"], "BudgetExhausted");
}

TEST(Cli, FloatMode) {
  const auto r = run("norm " + data("line4.json") + " " + data("line4_crossing.json") + " --mode float --tolerance 1e-6");
  EXPECT_EQ(r.code, 0);
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(r.out)["norm"]["value"].get<double>(), 2.0);
}

TEST(Cli, LinearizeWritesOutputAndCertifies) {
  const fs::path bundle = fs::temp_directory_path() / ("semilin_cli_bundle_" + std::to_string(::getpid()) + ".json");
  EXPECT_EQ(run("linearize " + data("line3.json") + " " + data("line3_shift.json") + " --output " + bundle.string()).code, 0);
  EXPECT_EQ(run("certify " + bundle.string()).code, 0);
  fs::remove(bundle);
}

TEST(Cli, LinearizeRefusal) {
  EXPECT_EQ(run("linearize " + data("integers.json") + " " + data("integer_shift.json") + " --budget 100").code, 2);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run("validate /nonexistent.json").code, 3);
  EXPECT_EQ(run("frobnicate").code, 3);
  EXPECT_EQ(run("validate " + data("line3.json") + " --mode fuzzy").code, 3);
  EXPECT_EQ(run("hausdorff " + data("pair.json") + " " + data("pair_collapse.json")).code, 3);
  EXPECT_EQ(run("").code, 3);
}

TEST(Cli, HelpDocumentsRules) {
  const auto r = run("--help");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("n -> n+1"), std::string::npos);
}

}  // namespace
