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

#include "semilin/metric.hpp"

#include "semilin/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace semilin {

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> names, std::vector<Scalar> table)
    : names_(std::move(names)), table_(std::move(table)) {
  if (table_.size() != names_.size() * names_.size()) {
    throw StructuralError("distance table has " + std::to_string(table_.size()) +
                          " entries, expected " + std::to_string(names_.size() * names_.size()));
  }
  index_.reserve(names_.size());
  for (PointIndex i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw StructuralError("empty point name");
    if (!index_.emplace(names_[i], i).second) {
      throw StructuralError("duplicate point name '" + names_[i] + "'");
    }
  }
}

FiniteMetricSpace FiniteMetricSpace::from_entries(std::vector<std::string> names,
                                                  const std::vector<Entry>& entries) {
  const std::size_t n = names.size();
  std::unordered_map<std::string, PointIndex> index;
  for (PointIndex i = 0; i < n; ++i) {
    if (!index.emplace(names[i], i).second) {
      throw StructuralError("duplicate point name '" + names[i] + "'");
    }
  }
  std::vector<std::optional<Scalar>> given(n * n);
  for (const auto& [a, b, d] : entries) {
    const auto ia = index.find(a);
    const auto ib = index.find(b);
    if (ia == index.end()) throw StructuralError("unknown point '" + a + "' in distance table");
    if (ib == index.end()) throw StructuralError("unknown point '" + b + "' in distance table");
    auto& slot = given[ia->second * n + ib->second];
    if (slot && *slot != d) {
      throw StructuralError("conflicting entries for pair (" + a + ", " + b + ")");
    }
    slot = d;
  }
  std::vector<Scalar> table(n * n);
  for (PointIndex i = 0; i < n; ++i) {
    for (PointIndex j = 0; j < n; ++j) {
      if (given[i * n + j]) {
        table[i * n + j] = *given[i * n + j];
      } else if (given[j * n + i]) {
        table[i * n + j] = *given[j * n + i];
      } else if (i != j) {
        throw StructuralError("missing distance for pair (" + names[i] + ", " + names[j] + ")");
      }
    }
  }
  return FiniteMetricSpace(std::move(names), std::move(table));
}

std::optional<PointIndex> FiniteMetricSpace::find(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PointIndex FiniteMetricSpace::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw StructuralError("unknown point '" + std::string(name) + "'");
}

FiniteMetricSpace FiniteMetricSpace::restrict_to(std::span<const PointIndex> points) const {
  std::vector<std::string> names;
  names.reserve(points.size());
  for (auto p : points) names.push_back(names_.at(p));
  std::vector<Scalar> table;
  table.reserve(points.size() * points.size());
  for (auto p : points) {
    for (auto q : points) table.push_back(dist(p, q));
  }
  return FiniteMetricSpace(std::move(names), std::move(table));
}

ValidationReport validate_metric(const FiniteMetricSpace& space) {
  ValidationReport report;
  const std::size_t n = space.size();
  const auto& nm = [&](PointIndex i) -> const std::string& { return space.name(i); };

  for (PointIndex x = 0; x < n; ++x) {
    if (!space.dist(x, x).is_zero()) {
      report.add({"zero-diagonal", {nm(x)}, {space.dist(x, x)}, "d(x,x) != 0"});
    }
  }
  bool symmetric = true;
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = 0; y < n; ++y) {
      if (x == y) continue;
      if (space.dist(x, y).sign() <= 0) {
        report.add({"positivity", {nm(x), nm(y)}, {space.dist(x, y)}, "d(x,y) <= 0 for x != y"});
      }
      if (x < y && space.dist(x, y) != space.dist(y, x)) {
        symmetric = false;
        report.add({"symmetry", {nm(x), nm(y)}, {space.dist(x, y), space.dist(y, x)},
                    "d(x,y) != d(y,x)"});
      }
    }
  }
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = symmetric ? x + 1 : 0; y < n; ++y) {
      if (x == y) continue;
      for (PointIndex w = 0; w < n; ++w) {
        if (w == x || w == y) continue;
        const Scalar via = space.dist(x, w) + space.dist(w, y);
        if (space.dist(x, y) > via) {
          report.add({"triangle", {nm(x), nm(y), nm(w)}, {space.dist(x, y), via},
                      "d(x,y) > d(x,w) + d(w,y)"});
        }
      }
    }
  }
  return report;
}

Scalar supdist(PointIndex x, std::span<const PointIndex> set, const FiniteMetricSpace& space) {
  if (set.empty()) throw PreconditionError("supdist over an empty set");
  Scalar best = space.dist(x, set.front());
  for (auto y : set.subspan(1)) {
    if (space.dist(x, y) > best) best = space.dist(x, y);
  }
  return best;
}

Scalar diam(std::span<const PointIndex> set, const FiniteMetricSpace& space) {
  Scalar best;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const Scalar& d = space.dist(set[i], set[j]);
      if (d > best) best = d;
    }
  }
  return best;
}

Scalar diam(const FiniteMetricSpace& space) {
  std::vector<PointIndex> all(space.size());
  for (PointIndex i = 0; i < all.size(); ++i) all[i] = i;
  return diam(all, space);
}

std::string point_name(const IntPoint& p) {
  if (p.size() == 1) return std::to_string(p.front());
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

ImplicitMetricSpace::ImplicitMetricSpace(std::size_t dimension, std::vector<IntPoint> seeds,
                                         DistanceOracle oracle)
    : dimension_(dimension), seeds_(std::move(seeds)), oracle_(std::move(oracle)) {
  if (dimension_ == 0) throw StructuralError("implicit space needs dimension >= 1");
  if (seeds_.empty()) throw StructuralError("implicit space needs at least one seed");
  for (const auto& s : seeds_) {
    if (s.size() != dimension_) {
      throw StructuralError("seed " + point_name(s) + " has wrong dimension");
    }
  }
  if (!oracle_) throw StructuralError("implicit space without distance oracle");
}

ImplicitMetricSpace ImplicitMetricSpace::lattice(std::size_t dimension, std::vector<IntPoint> seeds,
                                                 LatticeMetric metric, NumericMode mode) {
  DistanceOracle oracle = [metric, mode](const IntPoint& a, const IntPoint& b) -> Scalar {
    long long acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      long long diff = 0;
      long long mag = 0;
      if (__builtin_sub_overflow(a[i], b[i], &diff) || diff == std::numeric_limits<long long>::min()) {
        throw StructuralError("coordinate difference overflows");
      }
      mag = std::llabs(diff);
      switch (metric) {
        case LatticeMetric::L1:
          if (__builtin_add_overflow(acc, mag, &acc)) throw StructuralError("distance overflows");
          break;
        case LatticeMetric::LInf:
          acc = std::max(acc, mag);
          break;
        case LatticeMetric::Discrete:
          if (mag != 0) acc = 1;
          break;
      }
    }
    return mode.lift(Scalar(acc));
  };
  return ImplicitMetricSpace(dimension, std::move(seeds), std::move(oracle));
}

Scalar ImplicitMetricSpace::dist(const IntPoint& a, const IntPoint& b) const {
  if (a.size() != dimension_ || b.size() != dimension_) {
    throw StructuralError("point " + point_name(a.size() != dimension_ ? a : b) +
                          " has wrong dimension");
  }
  try {
    return oracle_(a, b);
  } catch (const StructuralError&) {
    throw;
  } catch (const std::exception& e) {
    throw StructuralError("distance oracle failed on (" + point_name(a) + ", " + point_name(b) +
                          "): " + e.what());
  }
}

FiniteMetricSpace ImplicitMetricSpace::materialize(std::span<const IntPoint> points) const {
  std::vector<std::string> names;
  names.reserve(points.size());
  for (const auto& p : points) names.push_back(point_name(p));
  std::vector<Scalar> table;
  table.reserve(points.size() * points.size());
  for (const auto& p : points) {
    for (const auto& q : points) table.push_back(dist(p, q));
  }
  return FiniteMetricSpace(std::move(names), std::move(table));
}

}  // namespace semilin
