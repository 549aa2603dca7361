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

#include "semilin/hausdorff.hpp"

#include "semilin/errors.hpp"
#include "semilin/extension.hpp"

#include <algorithm>

namespace semilin {

BoundedSubset::BoundedSubset(std::vector<PointIndex> elements, const FiniteMetricSpace& space)
    : elements_(std::move(elements)) {
  if (elements_.empty()) throw PreconditionError("bounded subset must be nonempty");
  for (auto p : elements_) {
    if (p >= space.size()) throw StructuralError("subset element outside the space");
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

BoundedSubset BoundedSubset::image(const SemigroupAction& action, std::size_t g,
                                   const FiniteMetricSpace& space) const {
  std::vector<PointIndex> out;
  out.reserve(elements_.size());
  for (auto p : elements_) out.push_back(action.apply(g, p));
  return BoundedSubset(std::move(out), space);
}

namespace {

/// sup over a in A of min over b in B of d(a, b).
Scalar directed(std::span<const PointIndex> a, std::span<const PointIndex> b,
                const FiniteMetricSpace& space) {
  Scalar worst;
  for (auto p : a) {
    Scalar nearest = space.dist(p, b.front());
    for (auto q : b.subspan(1)) nearest = min(nearest, space.dist(p, q));
    worst = max(worst, nearest);
  }
  return worst;
}

std::optional<PointIndex> first_moved(const SemigroupAction& action) {
  const auto fixed = find_fixed_points(action);
  for (PointIndex x = 0; x < action.domain_size(); ++x) {
    if (std::find(fixed.begin(), fixed.end(), x) == fixed.end()) return x;
  }
  return std::nullopt;
}

}  // namespace

Scalar hausdorff_dist(const BoundedSubset& a, const BoundedSubset& b, const FiniteMetricSpace& space) {
  return max(directed(a.elements(), b.elements(), space), directed(b.elements(), a.elements(), space));
}

bool is_isometric_group(const SemigroupAction& action, const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  if (action.domain_size() != n) throw StructuralError("action and space sizes differ");
  for (const auto& g : action.generators()) {
    std::vector<bool> hit(n, false);
    for (auto y : g.image) hit[y] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
    for (PointIndex x = 0; x < n; ++x) {
      for (PointIndex y = x + 1; y < n; ++y) {
        if (space.dist(g.image[x], g.image[y]) != space.dist(x, y)) return false;
      }
    }
  }
  return true;
}

ValidationReport check_group_identification(const FiniteMetricSpace& space, const SemigroupAction& action,
                                            std::size_t budget) {
  if (!is_isometric_group(action, space)) {
    throw PreconditionError("group identification needs every generator to be an isometric bijection");
  }
  ValidationReport report;
  for (PointIndex x = 0; x < space.size(); ++x) {
    for (PointIndex y = x; y < space.size(); ++y) {
      const Scalar dh = hausdorff_dist(BoundedSubset({x}, space), BoundedSubset({y}, space), space);
      if (dh != space.dist(x, y)) {
        report.add({"singleton-isometry", {space.name(x), space.name(y)}, {dh, space.dist(x, y)},
                    "d_H({x},{y}) != d(x,y)"});
      }
    }
  }

  const ExtendedSpace ext = build_fixed_point_extension(space, action, budget);
  const auto* sup = std::get_if<SupdistExtension>(&ext.provenance);
  if (!sup) {
    report.notes.emplace_back("every point is fixed; only the singleton identification applies");
    return report;
  }
  const SemigroupAction monoid = adjoin_identity(action);
  const auto orb = orbit(sup->x0, monoid, space, budget);
  const BoundedSubset orbit_set(orb.points, space);
  for (PointIndex x = 0; x < space.size(); ++x) {
    const Scalar dh = hausdorff_dist(BoundedSubset({x}, space), orbit_set, space);
    if (dh != ext.dist_to_z[x]) {
      report.add({"orbit-identification", {space.name(x), space.name(sup->x0)}, {dh, ext.dist_to_z[x]},
                  "d_H({x}, S·x0) != d(x,z)"});
    }
  }
  report.merge(check_orbit_fixed_under_subsets(space, action, budget));
  return report;
}

ValidationReport check_orbit_fixed_under_subsets(const FiniteMetricSpace& space,
                                                 const SemigroupAction& action, std::size_t budget) {
  ValidationReport report;
  const auto x0 = first_moved(action);
  if (!x0) {
    report.notes.emplace_back("every point is fixed; no orbit to test");
    return report;
  }
  const auto orb = orbit(*x0, adjoin_identity(action), space, budget);
  if (!orb.closed()) {
    report.inconclusive = "orbit of '" + space.name(*x0) + "' not closed within budget " +
                          std::to_string(budget);
    return report;
  }
  const BoundedSubset orbit_set(orb.points, space);
  for (std::size_t g = 0; g < action.generator_count(); ++g) {
    const BoundedSubset moved = orbit_set.image(action, g, space);
    if (!(moved == orbit_set)) {
      auto braces = [&](const BoundedSubset& s) {
        std::string out = "{";
        for (auto p : s.elements()) out += (out.size() > 1 ? "," : "") + space.name(p);
        return out + "}";
      };
      report.add({"orbit-not-fixed",
                  {action.generator(g).name, space.name(*x0)},
                  {},
                  action.generator(g).name + "·" + braces(orbit_set) + " = " + braces(moved)});
    }
  }
  return report;
}

}  // namespace semilin
