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

#include "semilin/commands.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

namespace semilin::cli {
namespace {

json data(const std::string& name) { return load_json(std::string(SEMILIN_TEST_DATA) + "/" + name); }

CommandOptions opts(std::size_t budget = kDefaultBudget) {
  CommandOptions o;
  o.budget = budget;
  return o;
}

TEST(Commands, Validate) {
  EXPECT_EQ(validate(data("line3.json"), data("line3_shift.json"), opts()).exit_code, kOk);
  EXPECT_EQ(validate(data("line3.json"), std::nullopt, opts()).exit_code, kOk);
  const auto bad = validate(data("not_metric.json"), std::nullopt, opts());
  EXPECT_EQ(bad.exit_code, kViolated);
  EXPECT_EQ(bad.output["report"]["violations"][0]["axiom"], "triangle");
  EXPECT_EQ(validate(data("pair.json"), data("line3_shift.json"), opts()).exit_code, kStructural);
  const auto imp = validate(data("integers.json"), data("integer_shift.json"), opts(50));
  EXPECT_EQ(imp.exit_code, kOk);
  EXPECT_EQ(imp.output["points"], 50);
  EXPECT_FALSE(imp.output["report"]["notes"].empty());
}

TEST(Commands, Orbit) {
  const auto closed = orbit(data("pair.json"), data("pair_collapse.json"), "a", opts());
  EXPECT_EQ(closed.exit_code, kOk);
  EXPECT_EQ(closed.output["status"], "Closed");
  EXPECT_EQ(closed.output["diameter_so_far"], "1");
  const auto open = orbit(data("integers.json"), data("integer_shift.json"), "0", opts(100));
  EXPECT_EQ(open.exit_code, kInconclusive);
  EXPECT_EQ(open.output["status"], "BudgetExhausted");
  EXPECT_EQ(open.output["diameter_so_far"], "99");
  EXPECT_EQ(orbit(data("pair.json"), data("pair_collapse.json"), "q", opts()).exit_code, kStructural);
}

TEST(Commands, Extend) {
  const auto r = extend(data("line3.json"), data("line3_shift.json"), std::nullopt, opts());
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.output["extension"]["provenance"]["x0"], "p0");
  const auto c = extend(data("pair.json"), data("pair_collapse.json"), std::string("2"), opts());
  EXPECT_EQ(c.exit_code, kOk);
  EXPECT_EQ(c.output["extension"]["provenance"]["c"], "2");
  const auto low = extend(data("pair.json"), data("pair_collapse.json"), std::string("1/2"), opts());
  EXPECT_EQ(low.exit_code, kStructural);
  EXPECT_EQ(low.output["error"], "precondition");
  const auto unbounded = extend(data("integers.json"), data("integer_shift.json"), std::nullopt, opts(100));
  EXPECT_EQ(unbounded.exit_code, kInconclusive);
  EXPECT_EQ(unbounded.output["point"], "0");
}

TEST(Commands, NormOnExtensionDefaultsToZ) {
  const auto ext = extend(data("line3.json"), data("line3_shift.json"), std::nullopt, opts()).output["extension"];
  const json u = json::parse(R"({"terms": [{"c": 1, "x": "p0", "y": "__z"}]})");
  const auto r = norm(ext, u, std::nullopt, opts());
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.output["base"], "__z");
  EXPECT_EQ(r.output["norm"]["value"], "2");
}

TEST(Commands, NormCrossing) {
  const auto r = norm(data("line4.json"), data("line4_crossing.json"), std::nullopt, opts());
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.output["norm"]["value"], "2");
  EXPECT_EQ(norm(data("line4.json"), data("line4_crossing.json"), std::string("nope"), opts()).exit_code,
            kStructural);
}

TEST(Commands, Hausdorff) {
  const auto g = hausdorff(data("triangle.json"), data("triangle_rotation.json"), {"x", "y,w"}, opts());
  EXPECT_EQ(g.exit_code, kOk);
  EXPECT_TRUE(g.output["group"].get<bool>());
  EXPECT_EQ(g.output["hausdorff"], "1");
  const auto ng = hausdorff(data("pair.json"), data("pair_collapse.json"), {}, opts());
  EXPECT_EQ(ng.exit_code, kStructural);
  EXPECT_EQ(ng.output["finding"]["violations"][0]["axiom"], "orbit-not-fixed");
  EXPECT_EQ(hausdorff(data("pair.json"), data("pair_collapse.json"), {"a"}, opts()).exit_code, kStructural);
}

TEST(Commands, LinearizeAndCertify) {
  const auto b = linearize(data("line3.json"), data("line3_shift.json"), opts());
  EXPECT_EQ(b.exit_code, kOk);
  EXPECT_EQ(b.output["status"], "certified");
  EXPECT_EQ(certify(b.output, opts()).exit_code, kOk);

  json tampered = b.output;
  tampered["embedding"][0]["norm"]["value"] = "5";
  const auto t = certify(tampered, opts());
  EXPECT_EQ(t.exit_code, kViolated);
  EXPECT_EQ(t.output["report"]["violations"][0]["axiom"], "embedding-isometry");

  const auto refused = linearize(data("integers.json"), data("integer_shift.json"), opts(100));
  EXPECT_EQ(refused.exit_code, kInconclusive);
  EXPECT_EQ(refused.output["refusal"]["point"], "0");
  EXPECT_EQ(certify(refused.output, opts()).exit_code, kInconclusive);

  EXPECT_EQ(linearize(data("not_metric.json"), data("identity3.json"), opts()).exit_code, kStructural);
  EXPECT_EQ(certify(json::parse("{}"), opts()).exit_code, kStructural);
}

TEST(Commands, DefaultBudgetOverride) {
  ::unsetenv("SEMILIN_DEFAULT_BUDGET");
  EXPECT_EQ(default_budget(), kDefaultBudget);
  ::setenv("SEMILIN_DEFAULT_BUDGET", "250", 1);
  EXPECT_EQ(default_budget(), 250U);
  ::setenv("SEMILIN_DEFAULT_BUDGET", "junk", 1);
  EXPECT_EQ(default_budget(), kDefaultBudget);
  ::unsetenv("SEMILIN_DEFAULT_BUDGET");
}

TEST(Commands, LoadJsonErrors) {
  EXPECT_THROW(load_json("/nonexistent/file.json"), StructuralError);
  EXPECT_THROW(load_json(std::string(SEMILIN_TEST_DATA) + "/broken.json.txt"), StructuralError);
}

}  // namespace
}  // namespace semilin::cli
