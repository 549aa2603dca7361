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

#include "testing.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace semilin::testing {

long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

Scalar q(long long num, long long den) { return Scalar(Rational(num, den)); }

namespace {

std::vector<std::string> q_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("q" + std::to_string(i));
  return names;
}

}  // namespace

FiniteMetricSpace line_space(std::size_t n) {
  std::vector<std::string> names;
  std::vector<Scalar> table;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table.emplace_back(i > j ? i - j : j - i);
  }
  return FiniteMetricSpace(names, table);
}

FiniteMetricSpace table_space(const std::vector<std::vector<Rational>>& rows) {
  std::vector<Scalar> table;
  for (const auto& row : rows) {
    for (const auto& v : row) table.emplace_back(v);
  }
  return FiniteMetricSpace(q_names(rows.size()), table);
}

FiniteMetricSpace random_space(Rng& rng, std::size_t n, long long max_numerator, long long denominator) {
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i][j] = d[j][i] = Rational(uniform(rng, 1, max_numerator), denominator);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return table_space(d);
}

std::vector<PointIndex> random_nonexpansive_map(Rng& rng, const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  std::vector<PointIndex> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int attempt = 0; attempt < 30; ++attempt) {
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<PointIndex> image(n);
    std::vector<bool> assigned(n, false);
    bool stuck = false;
    for (auto x : order) {
      std::vector<PointIndex> candidates;
      for (PointIndex y = 0; y < n; ++y) {
        bool fits = true;
        for (PointIndex p = 0; p < n && fits; ++p) {
          if (assigned[p]) {
            fits = space.dist(y, image[p]) <= space.dist(x, p) && space.dist(image[p], y) <= space.dist(p, x);
          }
        }
        if (fits) candidates.push_back(y);
      }
      if (candidates.empty()) {
        stuck = true;
        break;
      }
      image[x] = candidates[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(candidates.size()) - 1))];
      assigned[x] = true;
    }
    if (!stuck) return image;
  }
  return std::vector<PointIndex>(n, static_cast<PointIndex>(uniform(rng, 0, static_cast<long long>(n) - 1)));
}

SemigroupAction random_action(Rng& rng, const FiniteMetricSpace& space, std::size_t generators, bool monoid) {
  std::vector<GeneratorMap> gens;
  for (std::size_t g = 0; g < generators; ++g) {
    gens.push_back({"g" + std::to_string(g), random_nonexpansive_map(rng, space)});
  }
  return SemigroupAction(std::move(gens), monoid);
}

IsometryCase random_isometry(Rng& rng, std::size_t n) {
  const FiniteMetricSpace base = random_space(rng, n);
  std::vector<PointIndex> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  if (n > 1 && std::is_sorted(sigma.begin(), sigma.end())) std::rotate(sigma.begin(), sigma.begin() + 1, sigma.end());

  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
  std::vector<PointIndex> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<PointIndex> power = identity;
  do {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::max(d[i][j], base.dist(power[i], power[j]).rational());
    }
    for (auto& p : power) p = sigma[p];
  } while (power != identity);

  FiniteMetricSpace space = table_space(d);
  return {space, SemigroupAction({{"r", sigma}}, false)};
}

FormalCombination random_combination(Rng& rng, std::size_t points, std::size_t terms) {
  FormalCombination u;
  const auto last = static_cast<long long>(points) - 1;
  for (std::size_t t = 0; t < terms; ++t) {
    long long k = 0;
    while (k == 0) k = uniform(rng, -12, 12);
    u.terms.push_back({q(k, 6), static_cast<PointIndex>(uniform(rng, 0, last)),
                       static_cast<PointIndex>(uniform(rng, 0, last))});
  }
  return u;
}

SignedMass random_mass(Rng& rng, std::size_t points, std::size_t support, long long den) {
  std::vector<PointIndex> idx(points);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  const std::size_t k = static_cast<std::size_t>(uniform(rng, 2, static_cast<long long>(std::min(support, points))));
  SignedMass m;
  Rational total;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const Rational v(uniform(rng, -4 * den, 4 * den), den);
    m.add(idx[i], Scalar(v));
    total += v;
  }
  m.add(idx[k - 1], Scalar(Rational(-total)));
  return m;
}

Word random_word(Rng& rng, std::size_t generators, std::size_t max_length) {
  Word w(static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(max_length))));
  for (auto& letter : w) letter = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(generators) - 1));
  return w;
}

std::vector<PointIndex> naive_orbit(PointIndex x, const SemigroupAction& action) {
  std::set<PointIndex> reach;
  if (action.has_identity()) reach.insert(x);
  for (const auto& g : action.generators()) reach.insert(g.image[x]);
  for (;;) {
    std::set<PointIndex> next = reach;
    for (auto p : reach) {
      for (const auto& g : action.generators()) next.insert(g.image[p]);
    }
    if (next == reach) break;
    reach = std::move(next);
  }
  return {reach.begin(), reach.end()};
}

PointIndex naive_apply(const Word& w, PointIndex x, const SemigroupAction& action) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) x = action.generators()[*it].image[x];
  return x;
}

long long matching_oracle(const std::vector<long long>& mass, const std::vector<long long>& dist, std::size_t n) {
  std::vector<std::size_t> sources;
  std::vector<std::size_t> sinks;
  for (std::size_t p = 0; p < n; ++p) {
    for (long long k = 0; k < mass[p]; ++k) sources.push_back(p);
    for (long long k = 0; k < -mass[p]; ++k) sinks.push_back(p);
  }
  if (sources.size() != sinks.size()) throw std::invalid_argument("mass total is not zero");
  long long best = -1;
  std::sort(sinks.begin(), sinks.end());
  do {
    long long cost = 0;
    for (std::size_t i = 0; i < sources.size(); ++i) cost += dist[sources[i] * n + sinks[i]];
    if (best < 0 || cost < best) best = cost;
  } while (std::next_permutation(sinks.begin(), sinks.end()));
  return std::max(best, 0LL);
}

std::vector<std::vector<long long>> all_integer_masses(std::size_t n, long long max_positive) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> v(n, -max_positive);
  for (;;) {
    long long total = 0;
    long long positive = 0;
    for (auto x : v) {
      total += x;
      if (x > 0) positive += x;
    }
    if (total == 0 && positive >= 1 && positive <= max_positive) out.push_back(v);
    std::size_t i = 0;
    while (i < n && v[i] == max_positive) v[i++] = -max_positive;
    if (i == n) break;
    ++v[i];
  }
  return out;
}

}  // namespace semilin::testing
