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

#include "semilin/action.hpp"

#include "semilin/errors.hpp"

#include <deque>
#include <map>
#include <set>
#include <unordered_set>

namespace semilin {

SemigroupAction::SemigroupAction(std::vector<GeneratorMap> generators, bool has_identity)
    : generators_(std::move(generators)), has_identity_(has_identity) {
  if (generators_.empty()) throw StructuralError("action needs at least one generator");
  const std::size_t n = generators_.front().image.size();
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (!seen.insert(g.name).second) throw StructuralError("duplicate generator '" + g.name + "'");
    if (g.image.size() != n) {
      throw StructuralError("generator '" + g.name + "' is defined on " +
                            std::to_string(g.image.size()) + " points, expected " + std::to_string(n));
    }
    for (auto y : g.image) {
      if (y >= n) throw StructuralError("generator '" + g.name + "' maps outside the space");
    }
  }
}

PointIndex SemigroupAction::apply(const Word& w, PointIndex x) const {
  if (w.empty() && !has_identity_) {
    throw PreconditionError("empty word is not an element of a semigroup without identity");
  }
  for (auto it = w.rbegin(); it != w.rend(); ++it) x = apply(*it, x);
  return x;
}

SemigroupAction adjoin_identity(const SemigroupAction& action) {
  return SemigroupAction(action.generators(), true);
}

std::vector<Word> enumerate_words(const SemigroupAction& action, std::size_t max_length) {
  std::vector<Word> out;
  if (action.has_identity()) out.emplace_back();
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (std::size_t g = 0; g < action.generator_count(); ++g) {
        Word v = w;
        v.push_back(g);
        next.push_back(std::move(v));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

namespace {

void require_same_size(const SemigroupAction& action, const FiniteMetricSpace& space) {
  if (action.domain_size() != space.size()) {
    throw StructuralError("action is defined on " + std::to_string(action.domain_size()) +
                          " points but the space has " + std::to_string(space.size()));
  }
}

/// Breadth-first closure shared by the finite and implicit orbit code.
/// `step(p, g)` returns the image of p under generator g.
template <class Point, class Seen, class Step>
OrbitResult<Point> bfs_orbit(const Point& x, std::size_t generators, bool identity,
                             std::size_t budget, Seen& seen, Step step) {
  if (budget == 0) throw PreconditionError("orbit budget must be at least 1");
  OrbitResult<Point> result;
  result.base = x;
  std::deque<Point> queue;
  auto visit = [&](const Point& p) {
    if (seen.count(p)) return true;
    if (result.points.size() == budget) return false;
    seen.insert(p);
    result.points.push_back(p);
    queue.push_back(p);
    return true;
  };
  bool within = true;
  if (identity) within = visit(x);
  for (std::size_t g = 0; within && g < generators; ++g) within = visit(step(x, g));
  while (within && !queue.empty()) {
    const Point p = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; within && g < generators; ++g) within = visit(step(p, g));
  }
  result.status = within ? OrbitStatus::Closed : OrbitStatus::BudgetExhausted;
  result.budget_used = result.points.size();
  return result;
}

}  // namespace

ValidationReport check_non_expansive(const SemigroupAction& action, const FiniteMetricSpace& space) {
  require_same_size(action, space);
  ValidationReport report;
  for (const auto& g : action.generators()) {
    for (PointIndex x = 0; x < space.size(); ++x) {
      for (PointIndex y = x + 1; y < space.size(); ++y) {
        const Scalar& after = space.dist(g.image[x], g.image[y]);
        if (after > space.dist(x, y)) {
          report.add({"non-expansive",
                      {g.name, space.name(x), space.name(y)},
                      {after, space.dist(x, y)},
                      "d(s·x, s·y) > d(x,y)"});
        }
      }
    }
  }
  return report;
}

FiniteOrbit orbit(PointIndex x, const SemigroupAction& action, const FiniteMetricSpace& space,
                  std::size_t budget) {
  require_same_size(action, space);
  if (x >= space.size()) throw StructuralError("orbit base outside the space");
  std::unordered_set<PointIndex> seen;
  auto result = bfs_orbit<PointIndex>(x, action.generator_count(), action.has_identity(), budget, seen,
                                      [&](PointIndex p, std::size_t g) { return action.apply(g, p); });
  result.diameter_so_far = diam(result.points, space);
  return result;
}

std::vector<PointIndex> find_fixed_points(const SemigroupAction& action) {
  std::vector<PointIndex> out;
  for (PointIndex x = 0; x < action.domain_size(); ++x) {
    bool fixed = true;
    for (std::size_t g = 0; fixed && g < action.generator_count(); ++g) fixed = action.apply(g, x) == x;
    if (fixed) out.push_back(x);
  }
  return out;
}

ValidationReport check_orbit_transfer(PointIndex x, PointIndex y, const SemigroupAction& action,
                                        const FiniteMetricSpace& space, std::size_t budget) {
  ValidationReport report;
  const auto ox = orbit(x, action, space, budget);
  const auto oy = orbit(y, action, space, budget);
  if (!ox.closed() || !oy.closed()) {
    report.inconclusive = "orbit of '" + space.name(ox.closed() ? y : x) +
                          "' not closed within budget " + std::to_string(budget);
    return report;
  }
  const Scalar bound = Scalar(2) * space.dist(x, y) + ox.diameter_so_far;
  if (oy.diameter_so_far > bound) {
    report.add({"orbit-transfer",
                {space.name(x), space.name(y)},
                {oy.diameter_so_far, space.dist(x, y), ox.diameter_so_far},
                "diam(S·y) > 2 d(x,y) + diam(S·x)"});
  }
  report.notes.push_back("diam(S·" + space.name(y) + ")=" + oy.diameter_so_far.to_string() +
                         " <= 2*" + space.dist(x, y).to_string() + " + " +
                         ox.diameter_so_far.to_string());
  return report;
}

// ---------------------------------------------------------------------------

namespace {

IntPoint apply_symbolic(const ImplicitAction& action, std::size_t g, const IntPoint& p,
                        std::size_t dimension) {
  IntPoint out = action.generators[g].rule(p);
  if (out.size() != dimension) {
    throw StructuralError("generator '" + action.generators[g].name + "' is not total on " +
                          point_name(p));
  }
  return out;
}

void require_generators(const ImplicitAction& action, const ImplicitMetricSpace& space) {
  if (action.generators.empty()) throw StructuralError("action needs at least one generator");
  for (const auto& g : action.generators) {
    if (g.rule.arity() != space.dimension()) {
      throw StructuralError("generator '" + g.name + "' has arity " + std::to_string(g.rule.arity()) +
                            " on a space of dimension " + std::to_string(space.dimension()));
    }
  }
}

}  // namespace

ImplicitOrbit orbit(const IntPoint& x, const ImplicitAction& action, const ImplicitMetricSpace& space,
                    std::size_t budget) {
  require_generators(action, space);
  std::set<IntPoint> seen;
  auto result = bfs_orbit<IntPoint>(
      x, action.generators.size(), action.has_identity, budget, seen,
      [&](const IntPoint& p, std::size_t g) { return apply_symbolic(action, g, p, space.dimension()); });
  Scalar best;
  if (result.closed()) {
    for (std::size_t i = 0; i < result.points.size(); ++i) {
      for (std::size_t j = i + 1; j < result.points.size(); ++j) {
        const Scalar d = space.dist(result.points[i], result.points[j]);
        if (d > best) best = d;
      }
    }
  } else {
    for (std::size_t j = 1; j < result.points.size(); ++j) {
      const Scalar d = space.dist(result.points.front(), result.points[j]);
      if (d > best) best = d;
    }
  }
  result.diameter_so_far = best;
  return result;
}

Materialized materialize_closure(const ImplicitAction& action, const ImplicitMetricSpace& space,
                                 std::size_t budget) {
  require_generators(action, space);
  if (budget == 0) throw PreconditionError("budget must be at least 1");
  Materialized out;
  std::set<IntPoint> seen;
  std::deque<IntPoint> queue;
  auto visit = [&](const IntPoint& p) {
    if (seen.count(p)) return true;
    if (out.points.size() == budget) return false;
    seen.insert(p);
    out.points.push_back(p);
    queue.push_back(p);
    return true;
  };
  bool within = true;
  for (const auto& s : space.seeds()) {
    if (!(within = visit(s))) break;
  }
  while (within && !queue.empty()) {
    const IntPoint p = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; within && g < action.generators.size(); ++g) {
      within = visit(apply_symbolic(action, g, p, space.dimension()));
    }
  }
  out.complete = within;
  return out;
}

ValidationReport check_non_expansive(const ImplicitAction& action, const ImplicitMetricSpace& space,
                                     std::size_t budget) {
  const auto mat = materialize_closure(action, space, budget);
  ValidationReport report;
  for (const auto& g : action.generators) {
    std::vector<IntPoint> images;
    images.reserve(mat.points.size());
    for (const auto& p : mat.points) images.push_back(g.rule(p));
    for (std::size_t i = 0; i < mat.points.size(); ++i) {
      for (std::size_t j = i + 1; j < mat.points.size(); ++j) {
        const Scalar before = space.dist(mat.points[i], mat.points[j]);
        const Scalar after = space.dist(images[i], images[j]);
        if (after > before) {
          report.add({"non-expansive",
                      {g.name, point_name(mat.points[i]), point_name(mat.points[j])},
                      {after, before},
                      "d(s·x, s·y) > d(x,y)"});
        }
      }
    }
  }
  report.notes.push_back("checked on " + std::to_string(mat.points.size()) + " materialized points" +
                         (mat.complete ? " (closure complete)" : " (budget reached)"));
  return report;
}

std::vector<IntPoint> find_fixed_points(const ImplicitAction& action, const ImplicitMetricSpace& space,
                                        std::size_t budget) {
  const auto mat = materialize_closure(action, space, budget);
  std::vector<IntPoint> out;
  for (const auto& p : mat.points) {
    bool fixed = true;
    for (std::size_t g = 0; fixed && g < action.generators.size(); ++g) {
      fixed = apply_symbolic(action, g, p, space.dimension()) == p;
    }
    if (fixed) out.push_back(p);
  }
  return out;
}

std::pair<FiniteMetricSpace, SemigroupAction> to_finite(const ImplicitAction& action,
                                                        const ImplicitMetricSpace& space,
                                                        std::size_t budget) {
  std::size_t total = space.seeds().size();
  for (const auto& s : space.seeds()) {
    const auto o = orbit(s, action, space, budget);
    if (!o.closed()) throw UnboundedOrbitError(point_name(s), budget);
    total += o.points.size();
  }
  const auto mat = materialize_closure(action, space, total);
  if (!mat.complete) throw InvariantViolation("closure of closed orbits did not complete");

  std::map<IntPoint, PointIndex> index;
  for (PointIndex i = 0; i < mat.points.size(); ++i) index.emplace(mat.points[i], i);
  std::vector<GeneratorMap> gens;
  for (std::size_t g = 0; g < action.generators.size(); ++g) {
    GeneratorMap map{action.generators[g].name, {}};
    for (const auto& p : mat.points) {
      map.image.push_back(index.at(apply_symbolic(action, g, p, space.dimension())));
    }
    gens.push_back(std::move(map));
  }
  return {space.materialize(mat.points), SemigroupAction(std::move(gens), action.has_identity)};
}

}  // namespace semilin
