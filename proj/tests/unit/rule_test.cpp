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

#include "semilin/errors.hpp"
#include "semilin/rule.hpp"

#include <gtest/gtest.h>

#include <limits>

namespace semilin {
namespace {

IntPoint run(std::string_view rule, IntPoint p) { return IntRule::parse(rule)(p); }

TEST(IntRule, Shift) {
  EXPECT_EQ(run("n -> n+1", {0}), (IntPoint{1}));
  EXPECT_EQ(run("n -> n + 1", {-5}), (IntPoint{-4}));
  EXPECT_EQ(IntRule::parse("n -> n+1").arity(), 1U);
}

TEST(IntRule, Tuples) {
  EXPECT_EQ(run("(m,n) -> (n,m)", {3, 4}), (IntPoint{4, 3}));
  EXPECT_EQ(run("(x, y) -> (clamp(x-1, 0, 5), -y)", {0, 7}), (IntPoint{0, -7}));
  EXPECT_EQ(run("(m,n) -> (n, m*2)", {3, 4}), (IntPoint{4, 6}));
}

TEST(IntRule, Precedence) {
  EXPECT_EQ(run("n -> 1 + 2 * n", {3}), (IntPoint{7}));
  EXPECT_EQ(run("n -> (1 + 2) * n", {3}), (IntPoint{9}));
  EXPECT_EQ(run("n -> (n+1)*2", {3}), (IntPoint{8}));
  EXPECT_EQ(run("n -> n - 1 - 1", {3}), (IntPoint{1}));
  EXPECT_EQ(run("n -> --n", {3}), (IntPoint{3}));
  EXPECT_EQ(run("n -> (n)", {3}), (IntPoint{3}));
}

TEST(IntRule, Functions) {
  EXPECT_EQ(run("n -> min(n+1, 10)", {10}), (IntPoint{10}));
  EXPECT_EQ(run("n -> max(n, 0, 2)", {1}), (IntPoint{2}));
  EXPECT_EQ(run("n -> abs(n)", {-4}), (IntPoint{4}));
  EXPECT_EQ(run("n -> clamp(n, -1, 1)", {-9}), (IntPoint{-1}));
}

TEST(IntRule, ParseErrors) {
  for (const char* bad : {"n n+1", "n -> m", "(m,n) -> m", "n -> (n,n)", "n -> f(n)", "n -> min(n)",
                          "n -> abs(n, n)", "n -> n +", "(n, n) -> (n, n)", "n -> n $ 1", "n -> n)",
                          "n -> 99999999999999999999"}) {
    EXPECT_THROW(IntRule::parse(bad), StructuralError) << bad;
  }
}

TEST(IntRule, EvaluationErrors) {
  constexpr long long big = std::numeric_limits<long long>::max();
  EXPECT_THROW(run("n -> n+1", {big}), StructuralError);
  EXPECT_THROW(run("n -> n*n", {big / 2}), StructuralError);
  EXPECT_THROW(run("n -> -n", {std::numeric_limits<long long>::min()}), StructuralError);
  EXPECT_THROW(run("n -> clamp(n, 2, 1)", {0}), StructuralError);
  EXPECT_THROW(run("n -> n", {1, 2}), StructuralError);
}

}  // namespace
}  // namespace semilin
