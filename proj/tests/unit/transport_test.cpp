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
#include "semilin/transport.hpp"
#include "testing.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace semilin {
namespace {

using testing::q;

void expect_optimal_basis(const TransportProblem& p, const TransportSolution& s) {
  const std::size_t m = p.supply.size();
  const std::size_t n = p.demand.size();
  Scalar cost;
  for (std::size_t i = 0; i < m; ++i) {
    Scalar row;
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& f = s.flow[i * n + j];
      ASSERT_GE(f, Scalar(0));
      row += f;
      cost += f * p.cost[i * n + j];
      const Scalar reduced = p.cost[i * n + j] - s.row_potential[i] - s.col_potential[j];
      ASSERT_GE(reduced, Scalar(0));
      if (f.sign() > 0) ASSERT_EQ(reduced, Scalar(0));
    }
    ASSERT_EQ(row, p.supply[i]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    Scalar col;
    for (std::size_t i = 0; i < m; ++i) col += s.flow[i * n + j];
    ASSERT_EQ(col, p.demand[j]);
  }
  ASSERT_EQ(cost, s.cost);
  Scalar dual;
  for (std::size_t i = 0; i < m; ++i) dual += p.supply[i] * s.row_potential[i];
  for (std::size_t j = 0; j < n; ++j) dual += p.demand[j] * s.col_potential[j];
  ASSERT_EQ(dual, s.cost);
}

TEST(SolveTransport, NorthwestCornerIsNotOptimalHere) {
  // 2x2 where the NW start (diagonal) costs 10 and the optimum costs 2.
  const TransportProblem p{{1, 1}, {1, 1}, {5, 1, 1, 5}};
  const auto s = solve_transport(p);
  EXPECT_EQ(s.cost, Scalar(2));
  EXPECT_GE(s.pivots, 1U);
  expect_optimal_basis(p, s);
}

TEST(SolveTransport, SingleCell) {
  const TransportProblem p{{q(3, 2)}, {q(3, 2)}, {q(2, 3)}};
  const auto s = solve_transport(p);
  EXPECT_EQ(s.cost, Scalar(1));
  expect_optimal_basis(p, s);
}

TEST(SolveTransport, DegenerateProblem) {
  // Partial sums coincide, so the start basis carries zero flows.
  const TransportProblem p{{1, 1, 1}, {1, 1, 1}, {3, 2, 1, 2, 1, 2, 1, 2, 3}};
  const auto s = solve_transport(p);
  EXPECT_EQ(s.cost, Scalar(3));
  expect_optimal_basis(p, s);
}

TEST(SolveTransport, Preconditions) {
  EXPECT_THROW(solve_transport({{}, {1}, {}}), PreconditionError);
  EXPECT_THROW(solve_transport({{1}, {2}, {1}}), PreconditionError);
  EXPECT_THROW(solve_transport({{0, 1}, {1}, {1, 1}}), PreconditionError);
  EXPECT_THROW(solve_transport({{1}, {1}, {1, 2}}), PreconditionError);
}

// Brute force over all integer flows for tiny integer instances.
long long brute(const std::vector<long long>& sup, const std::vector<long long>& dem,
                const std::vector<long long>& cost) {
  const std::size_t m = sup.size(), n = dem.size();
  long long best = -1;
  std::vector<long long> flow(m * n, 0);
  std::vector<long long> row(m, 0), col(n, 0);
  auto rec = [&](auto&& self, std::size_t cell, long long c) -> void {
    if (cell == m * n) {
      if (row == sup && col == dem && (best < 0 || c < best)) best = c;
      return;
    }
    const std::size_t i = cell / n, j = cell % n;
    for (long long f = 0; row[i] + f <= sup[i] && col[j] + f <= dem[j]; ++f) {
      row[i] += f;
      col[j] += f;
      self(self, cell + 1, c + f * cost[cell]);
      row[i] -= f;
      col[j] -= f;
    }
  };
  rec(rec, 0, 0);
  return best;
}

TEST(SolveTransport, RandomAgainstBruteForce) {
  testing::Rng rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const auto m = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    std::vector<long long> sup(m), dem(n, 0), cost(m * n);
    long long total = 0;
    for (auto& s : sup) total += (s = testing::uniform(rng, 1, 4));
    // Spread total over n positive demands.
    if (total < static_cast<long long>(n)) {
      sup[0] += static_cast<long long>(n) - total;
      total = static_cast<long long>(n);
    }
    for (auto& d : dem) d = 1;
    for (long long left = total - static_cast<long long>(n); left > 0; --left) {
      ++dem[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<long long>(n) - 1))];
    }
    for (auto& c : cost) c = testing::uniform(rng, 0, 9);
    TransportProblem p;
    for (auto s : sup) p.supply.emplace_back(s);
    for (auto d : dem) p.demand.emplace_back(d);
    for (auto c : cost) p.cost.emplace_back(c);
    const auto sol = solve_transport(p);
    ASSERT_EQ(sol.cost, Scalar(brute(sup, dem, cost)));
    expect_optimal_basis(p, sol);
  }
}

TEST(SolveTransport, FloatModeAgreesWithExact) {
  testing::Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    TransportProblem exact, approx;
    Rational total;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational s(testing::uniform(rng, 1, 20), 7);
      total += s;
      exact.supply.emplace_back(s);
    }
    Rational left = total;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const Rational d = left / (n - j + 1);
      left -= d;
      exact.demand.emplace_back(d);
    }
    exact.demand.emplace_back(left);
    for (std::size_t k = 0; k < m * n; ++k) exact.cost.push_back(q(testing::uniform(rng, 0, 30), 4));
    auto lift = [](const Scalar& v) { return Scalar::approx(v.to_double()); };
    for (const auto& v : exact.supply) approx.supply.push_back(lift(v));
    for (const auto& v : exact.demand) approx.demand.push_back(lift(v));
    for (const auto& v : exact.cost) approx.cost.push_back(lift(v));
    const auto se = solve_transport(exact);
    const auto sa = solve_transport(approx);
    ASSERT_FALSE(sa.cost.is_exact());
    ASSERT_NEAR(sa.cost.to_double(), se.cost.to_double(), 1e-9 * (1 + std::abs(se.cost.to_double())));
  }
}

}  // namespace
}  // namespace semilin
