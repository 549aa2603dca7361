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

#include "semilin/arens_eells.hpp"
#include "semilin/errors.hpp"
#include "semilin/extension.hpp"
#include "testing.hpp"

#include <gtest/gtest.h>

namespace semilin {
namespace {

using testing::q;

FiniteMetricSpace az() { return FiniteMetricSpace::from_entries({"a", "z"}, {{"a", "z", 1}}); }

SignedMass mass(std::initializer_list<std::pair<PointIndex, Scalar>> entries) {
  SignedMass m;
  for (const auto& [p, v] : entries) m.add(p, v);
  return m;
}

TEST(Reduce, Examples) {
  EXPECT_TRUE(reduce(FormalCombination{{{1, 0, 1}, {1, 1, 0}}}).empty());
  EXPECT_EQ(reduce(FormalCombination{{{1, 0, 1}}}), mass({{0, 1}, {1, -1}}));
  EXPECT_EQ(reduce(FormalCombination{{{1, 0, 2}, {1, 3, 1}}}), mass({{0, 1}, {3, 1}, {1, -1}, {2, -1}}));
  EXPECT_TRUE(reduce(FormalCombination{{{5, 2, 2}}}).empty());
}

TEST(SignedMass, Algebra) {
  SignedMass m = mass({{0, q(1, 2)}, {1, q(-1, 2)}});
  m += mass({{1, q(1, 2)}, {2, q(-1, 2)}});
  EXPECT_EQ(m, mass({{0, q(1, 2)}, {2, q(-1, 2)}}));
  EXPECT_EQ(m.scaled(Scalar(0)), SignedMass());
  EXPECT_EQ(m.scaled(Scalar(-2)).at(0), Scalar(-1));
  EXPECT_EQ(m.total(), Scalar(0));
  EXPECT_EQ(m.at(7), Scalar(0));
}

TEST(AeNorm, ZeroCombination) {
  const auto s = az();
  const auto r = ae_norm(FormalCombination{}, {s, 1});
  EXPECT_EQ(r.value, Scalar(0));
  EXPECT_TRUE(r.plan.flows.empty());
  EXPECT_EQ(r.potential.values.at(1), Scalar(0));
}

TEST(AeNorm, SingleTerm) {
  const auto s = az();
  const FormalCombination u{{{1, 0, 1}}};
  const auto r = ae_norm(u, {s, 1});
  EXPECT_EQ(r.value, Scalar(1));
  EXPECT_EQ(r.potential.values.at(0), Scalar(1));
  EXPECT_EQ(r.potential.values.at(1), Scalar(0));
  EXPECT_TRUE(verify_dual_certificate(u, r, {s, 1}).ok());
}

TEST(AeNorm, FourPointLineCrossing) {
  const auto line = testing::line_space(4);
  const FormalCombination u{{{1, 0, 2}, {1, 3, 1}}};
  const PointedSpace pointed{line, 0};
  const auto r = ae_norm(u, pointed);
  EXPECT_EQ(r.value, Scalar(2));
  ASSERT_EQ(r.plan.flows.size(), 2U);
  EXPECT_EQ(r.plan.flows[0].from, 0U);
  EXPECT_EQ(r.plan.flows[0].to, 1U);
  EXPECT_EQ(r.plan.flows[1].from, 3U);
  EXPECT_EQ(r.plan.flows[1].to, 2U);
  EXPECT_TRUE(verify_dual_certificate(u, r, pointed).ok());
  // Naive representation costs 4.
  EXPECT_EQ(line.dist(0, 2) + line.dist(3, 1), Scalar(4));

  // The potential f = (1, 0, 0, 1) is another optimal dual; the checker
  // accepts it with the same plan.
  NormResult other = r;
  other.potential.values = {{0, 1}, {1, 0}, {2, 0}, {3, 1}};
  EXPECT_TRUE(verify_dual_certificate(u, other, {line, 1}).ok());
}

TEST(AeNorm, Preconditions) {
  const auto s = az();
  EXPECT_THROW(ae_norm(mass({{0, 1}}), {s, 1}), PreconditionError);
  EXPECT_THROW(ae_norm(FormalCombination{{{1, 0, 5}}}, {s, 1}), StructuralError);
  EXPECT_THROW(ae_norm(FormalCombination{}, {s, 4}), StructuralError);
}

TEST(Embed, Examples) {
  const auto s = az();
  EXPECT_EQ(ae_norm(embed(0, {s, 1}), {s, 1}).value, Scalar(1));
  EXPECT_TRUE(embed(1, {s, 1}).terms.empty());
  EXPECT_EQ(ae_norm(embed(1, {s, 1}), {s, 1}).value, Scalar(0));

  const auto line = testing::line_space(3);
  const SemigroupAction shift({{"s", {1, 2, 2}}}, true);
  const auto ext = build_fixed_point_extension(line, shift, 100);
  const auto full = ext.as_space();
  const PointedSpace pointed{full, ext.z()};
  const auto r = ae_norm(embed(0, pointed), pointed);
  EXPECT_EQ(r.value, Scalar(2));
  EXPECT_TRUE(verify_dual_certificate(embed(0, pointed), r, pointed).ok());
}

TEST(ApplyAction, Examples) {
  const auto line = testing::line_space(3);
  const SemigroupAction shift({{"s", {1, 2, 2}}}, true);
  const FormalCombination u{{{1, 0, 2}}};
  const auto su = apply_action({0}, u, shift);
  EXPECT_EQ(reduce(su), reduce(FormalCombination{{{1, 1, 2}}}));
  EXPECT_EQ(ae_norm(u, {line, 2}).value, Scalar(2));
  EXPECT_EQ(ae_norm(su, {line, 2}).value, Scalar(1));
  EXPECT_TRUE(apply_action({0}, FormalCombination{}, shift).terms.empty());

  const auto ext = build_fixed_point_extension(line, shift, 100);
  const auto full = ext.as_space();
  const auto act = extend_action(shift);
  const PointedSpace pointed{full, ext.z()};
  for (PointIndex x = 0; x < 3; ++x) {
    EXPECT_EQ(reduce(apply_action({0}, embed(x, pointed), act)), reduce(embed(act.apply(0, x), pointed)));
  }
  EXPECT_THROW(apply_action({0}, FormalCombination{{{1, 0, 3}}}, shift), StructuralError);
}

TEST(VerifyDualCertificate, DetectsTampering) {
  const auto line = testing::line_space(4);
  const FormalCombination u{{{1, 0, 2}, {1, 3, 1}}};
  const PointedSpace pointed{line, 0};
  const auto good = ae_norm(u, pointed);

  NormResult lip = good;
  lip.potential.values[3] = Scalar(7);
  const auto r1 = verify_dual_certificate(u, lip, pointed);
  EXPECT_TRUE(r1.has("lipschitz"));
  EXPECT_TRUE(r1.has("dual-value"));

  NormResult feas = good;
  feas.plan.flows[0].to = 2;
  const auto r2 = verify_dual_certificate(u, feas, pointed);
  ASSERT_TRUE(r2.has("feasibility"));
  EXPECT_FALSE(r2.violations.front().witnesses.empty());

  NormResult value = good;
  value.value = Scalar(1);
  const auto r3 = verify_dual_certificate(u, value, pointed);
  EXPECT_TRUE(r3.has("plan-cost"));
  EXPECT_TRUE(r3.has("dual-value"));

  NormResult missing = good;
  missing.potential.values.erase(2);
  EXPECT_TRUE(verify_dual_certificate(u, missing, pointed).has("potential-domain"));

  NormResult negative = good;
  negative.plan.flows[0].amount = Scalar(-1);
  EXPECT_TRUE(verify_dual_certificate(u, negative, pointed).has("plan-amount"));

  NormResult outside = good;
  outside.plan.flows[0].to = 9;
  EXPECT_TRUE(verify_dual_certificate(u, outside, pointed).has("plan-domain"));
}

TEST(AeNormProperties, NormAxiomsAndSoundness) {
  testing::Rng rng(29);
  for (int trial = 0; trial < 150; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 2, 10));
    const auto s = testing::random_space(rng, n);
    const PointedSpace pointed{s, static_cast<PointIndex>(testing::uniform(rng, 0, static_cast<long long>(n) - 1))};
    const auto u = testing::random_combination(rng, n, static_cast<std::size_t>(testing::uniform(rng, 1, 6)));
    const auto v = testing::random_combination(rng, n, static_cast<std::size_t>(testing::uniform(rng, 1, 6)));
    const auto nu = ae_norm(u, pointed);
    ASSERT_TRUE(verify_dual_certificate(u, nu, pointed).ok());
    ASSERT_EQ(nu.value.is_zero(), reduce(u).empty());

    // Upper-bound soundness: the presentation itself is a representation.
    Scalar naive;
    for (const auto& t : u.terms) naive += abs(t.c) * s.dist(t.x, t.y);
    ASSERT_LE(nu.value, naive);

    const Scalar c = q(testing::uniform(rng, -9, 9), testing::uniform(rng, 1, 5));
    FormalCombination cu = u;
    for (auto& t : cu.terms) t.c *= c;
    ASSERT_EQ(ae_norm(cu, pointed).value, abs(c) * nu.value);

    FormalCombination sum = u;
    sum.terms.insert(sum.terms.end(), v.terms.begin(), v.terms.end());
    ASSERT_LE(ae_norm(sum, pointed).value, nu.value + ae_norm(v, pointed).value);

    // Presentation independence: the norm depends on the reduced mass only.
    FormalCombination shuffled;
    for (const auto& t : u.terms) {
      const auto w = static_cast<PointIndex>(testing::uniform(rng, 0, static_cast<long long>(n) - 1));
      shuffled.terms.push_back({t.c, t.x, w});
      shuffled.terms.push_back({t.c, w, t.y});
    }
    ASSERT_EQ(ae_norm(shuffled, pointed).value, nu.value);
  }
}

TEST(AeNormProperties, MatchesExhaustiveOracleOnSmallSpaces) {
  testing::Rng rng(31);
  const auto masses = testing::all_integer_masses(4, 4);
  for (int trial = 0; trial < 5; ++trial) {
    const auto s = testing::random_space(rng, 4, 12, 1);
    std::vector<long long> dist(16);
    for (PointIndex i = 0; i < 4; ++i) {
      for (PointIndex j = 0; j < 4; ++j) dist[i * 4 + j] = s.dist(i, j).rational().convert_to<long long>();
    }
    for (const auto& m : masses) {
      SignedMass sm;
      for (PointIndex p = 0; p < 4; ++p) sm.add(p, Scalar(m[p]));
      ASSERT_EQ(ae_norm(sm, {s, 0}).value, Scalar(testing::matching_oracle(m, dist, 4)));
    }
  }
}

TEST(AeNormProperties, LinearityAndContraction) {
  testing::Rng rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 2, 9));
    const auto s = testing::random_space(rng, n);
    const auto act = testing::random_action(rng, s, 2, false);
    const PointedSpace pointed{s, 0};
    for (int k = 0; k < 5; ++k) {
      const auto u = testing::random_combination(rng, n, 4);
      const auto v = testing::random_combination(rng, n, 3);
      const Word w = testing::random_word(rng, 2, 4);
      FormalCombination sum = u;
      sum.terms.insert(sum.terms.end(), v.terms.begin(), v.terms.end());
      ASSERT_EQ(reduce(apply_action(w, sum, act)), reduce(apply_action(w, u, act)) + reduce(apply_action(w, v, act)));
      ASSERT_LE(ae_norm(apply_action(w, u, act), pointed).value, ae_norm(u, pointed).value);
    }
  }
}

TEST(AeNorm, FloatModeWithinTolerance) {
  testing::Rng rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 2, 10));
    const auto s = testing::random_space(rng, n);
    std::vector<Scalar> table;
    for (PointIndex i = 0; i < n; ++i) {
      for (PointIndex j = 0; j < n; ++j) table.push_back(Scalar::approx(s.dist(i, j).to_double()));
    }
    const FiniteMetricSpace fs(s.names(), table);
    const auto m = testing::random_mass(rng, n, 10);
    SignedMass fm;
    for (const auto& [p, v] : m.entries()) fm.add(p, Scalar::approx(v.to_double()));
    if (!fm.total().is_zero()) continue;
    const auto exact = ae_norm(m, {s, 0});
    const auto approx = ae_norm(fm, {fs, 0});
    const double e = exact.value.to_double();
    ASSERT_LE(std::abs(approx.value.to_double() - e), 1e-9 * (1 + std::abs(e)));
  }
}

}  // namespace
}  // namespace semilin
