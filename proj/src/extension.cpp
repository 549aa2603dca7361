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

#include "semilin/extension.hpp"

#include "semilin/errors.hpp"

#include <algorithm>

namespace semilin {

namespace {

void require_fresh_z(const FiniteMetricSpace& space) {
  if (space.find(kFixedPointName)) {
    throw StructuralError("point name '" + std::string(kFixedPointName) + "' is reserved");
  }
}

void require_domain(const SemigroupAction& action, const FiniteMetricSpace& space) {
  if (action.domain_size() != space.size()) {
    throw StructuralError("action is defined on " + std::to_string(action.domain_size()) +
                          " points but the space has " + std::to_string(space.size()));
  }
}

/// The action on X ∪ {z}: `action` as given if it already covers z.
SemigroupAction union_action(const ExtendedSpace& ext, const SemigroupAction& action) {
  if (action.domain_size() == ext.base.size()) return extend_action(action);
  if (action.domain_size() == ext.base.size() + 1) return action;
  throw StructuralError("action domain matches neither the base space nor its extension");
}

}  // namespace

FiniteMetricSpace ExtendedSpace::as_space() const {
  const std::size_t n = base.size();
  if (dist_to_z.size() != n) throw StructuralError("extension has the wrong number of z distances");
  std::vector<std::string> names = base.names();
  names.emplace_back(kFixedPointName);
  std::vector<Scalar> table;
  table.reserve((n + 1) * (n + 1));
  for (PointIndex i = 0; i < n; ++i) {
    for (PointIndex j = 0; j < n; ++j) table.push_back(base.dist(i, j));
    table.push_back(dist_to_z[i]);
  }
  for (PointIndex j = 0; j < n; ++j) table.push_back(dist_to_z[j]);
  table.emplace_back();
  return FiniteMetricSpace(std::move(names), std::move(table));
}

ExtendedSpace extend_bounded_const(const FiniteMetricSpace& space, const SemigroupAction& action,
                                   const Scalar& c) {
  require_fresh_z(space);
  require_domain(action, space);
  const Scalar d = diam(space);
  if (!(c > d)) {
    throw PreconditionError("constant " + c.to_string() + " must exceed diam(X) = " + d.to_string());
  }
  return ExtendedSpace{space, std::vector<Scalar>(space.size(), c), ConstantExtension{c}};
}

ExtendedSpace build_fixed_point_extension(const FiniteMetricSpace& space, const SemigroupAction& action,
                                          std::size_t budget) {
  require_fresh_z(space);
  require_domain(action, space);
  const SemigroupAction monoid = adjoin_identity(action);

  std::vector<std::vector<PointIndex>> orbits;
  orbits.reserve(space.size());
  for (PointIndex x = 0; x < space.size(); ++x) {
    auto o = orbit(x, monoid, space, budget);
    if (!o.closed()) throw UnboundedOrbitError(space.name(x), budget);
    orbits.push_back(std::move(o.points));
  }

  const auto fixed = find_fixed_points(monoid);
  if (fixed.size() == space.size()) {
    return extend_bounded_const(space, action, diam(space) + Scalar(1));
  }
  PointIndex x0 = 0;
  while (x0 < space.size() && std::find(fixed.begin(), fixed.end(), x0) != fixed.end()) ++x0;

  ExtendedSpace ext{space, {}, SupdistExtension{x0, orbits}};
  ext.dist_to_z.reserve(space.size());
  for (PointIndex x = 0; x < space.size(); ++x) ext.dist_to_z.push_back(supdist(x0, orbits[x], space));

  for (PointIndex x = 0; x < space.size(); ++x) {
    if (ext.dist_to_z[x].sign() <= 0) {
      throw InvariantViolation("d(" + space.name(x) + ", z) is not positive");
    }
    if (ext.dist_to_z[x] > space.dist(x0, x) + diam(orbits[x], space)) {
      throw InvariantViolation("d(" + space.name(x) + ", z) exceeds d(x0,x) + diam(S·x)");
    }
  }
  return ext;
}

SemigroupAction extend_action(const SemigroupAction& action) {
  std::vector<GeneratorMap> gens = action.generators();
  const PointIndex z = action.domain_size();
  for (auto& g : gens) g.image.push_back(z);
  return SemigroupAction(std::move(gens), action.has_identity());
}

ValidationReport validate_extension(const ExtendedSpace& ext, const SemigroupAction& action) {
  const FiniteMetricSpace& x = ext.base;
  const std::size_t n = x.size();
  const FiniteMetricSpace full = ext.as_space();
  const PointIndex z = ext.z();
  const std::string zname(kFixedPointName);

  ValidationReport report = validate_metric(x);

  for (PointIndex p = 0; p < n; ++p) {
    if (ext.dist_to_z[p].sign() <= 0) {
      report.add({"positivity", {x.name(p), zname}, {ext.dist_to_z[p]}, "d(x,z) <= 0"});
    }
  }
  // Case (a): d(x,z) <= d(x,y) + d(y,z).
  for (PointIndex p = 0; p < n; ++p) {
    for (PointIndex q = 0; q < n; ++q) {
      if (p == q) continue;
      const Scalar via = x.dist(p, q) + ext.dist_to_z[q];
      if (ext.dist_to_z[p] > via) {
        report.add({"triangle-a", {x.name(p), x.name(q), zname}, {ext.dist_to_z[p], via},
                    "d(x,z) > d(x,y) + d(y,z)"});
      }
    }
  }
  // Case (b): d(x,y) <= d(x,z) + d(y,z).
  for (PointIndex p = 0; p < n; ++p) {
    for (PointIndex q = p + 1; q < n; ++q) {
      const Scalar via = ext.dist_to_z[p] + ext.dist_to_z[q];
      if (x.dist(p, q) > via) {
        report.add({"triangle-b", {x.name(p), x.name(q), zname}, {x.dist(p, q), via},
                    "d(x,y) > d(x,z) + d(y,z)"});
      }
    }
  }

  const SemigroupAction act = union_action(ext, action);
  for (const auto& g : act.generators()) {
    if (g.image[z] != z) {
      report.add({"z-fixed", {g.name, full.name(g.image[z])}, {}, "s·z != z"});
    }
    for (PointIndex p = 0; p < n; ++p) {
      if (g.image[p] == z) {
        report.add({"inclusion-equivariant", {g.name, x.name(p)}, {}, "s·x leaves X"});
      }
    }
  }
  for (auto v : check_non_expansive(act, full).violations) {
    if (v.witnesses[1] == zname || v.witnesses[2] == zname) v.axiom = "non-expansive-at-z";
    report.add(std::move(v));
  }
  for (PointIndex p = 0; p < n; ++p) {
    for (PointIndex q = 0; q < n; ++q) {
      if (full.dist(p, q) != x.dist(p, q)) {
        report.add({"inclusion-isometry", {x.name(p), x.name(q)}, {full.dist(p, q), x.dist(p, q)},
                    "extension changed a base distance"});
      }
    }
  }
  return report;
}

ValidationReport check_diam_bound(const ExtendedSpace& ext, const SemigroupAction& action,
                                  std::size_t budget) {
  ValidationReport report;
  const FiniteMetricSpace full = ext.as_space();
  const SemigroupAction act = adjoin_identity(union_action(ext, action));
  for (PointIndex p = 0; p < ext.base.size(); ++p) {
    const auto o = orbit(p, act, full, budget);
    if (!o.closed()) {
      report.inconclusive = "orbit of '" + ext.base.name(p) + "' not closed within budget " +
                            std::to_string(budget);
      return report;
    }
    const Scalar bound = Scalar(2) * ext.dist_to_z[p];
    if (o.diameter_so_far > bound) {
      report.add({"diam-bound", {ext.base.name(p)}, {o.diameter_so_far, bound}, "diam(S·x) > 2 d(x,z)"});
    }
  }
  return report;
}

}  // namespace semilin
