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

#ifndef SEMILIN_EXTENSION_HPP
#define SEMILIN_EXTENSION_HPP

#include "semilin/action.hpp"
#include "semilin/metric.hpp"

#include <string_view>
#include <variant>
#include <vector>

namespace semilin {

/// Reserved name of the adjoined fixed point. Rejected in user input.
inline constexpr std::string_view kFixedPointName = "__z";

/// d(z, x) = c for every x.
struct ConstantExtension {
  Scalar c;
};

/// d(z, x) = supdist(x0, S_e·x), with the orbits used recorded per point.
struct SupdistExtension {
  PointIndex x0;
  std::vector<std::vector<PointIndex>> orbits;
};

/// X together with one extra point z.
///
/// z has index base.size() in as_space(). The base table is reused verbatim,
/// so the inclusion X -> X ∪ {z} preserves distances by construction.
struct ExtendedSpace {
  FiniteMetricSpace base;
  std::vector<Scalar> dist_to_z;
  std::variant<ConstantExtension, SupdistExtension> provenance;

  [[nodiscard]] PointIndex z() const noexcept { return base.size(); }
  [[nodiscard]] FiniteMetricSpace as_space() const;
};

/// Constant-distance extension for bounded spaces. Requires c > diam(X);
/// throws PreconditionError quoting the diameter otherwise.
ExtendedSpace extend_bounded_const(const FiniteMetricSpace& space, const SemigroupAction& action,
                                   const Scalar& c);

/// Fixed-point extension for actions with bounded orbits.
///
/// The identity is adjoined first so that x ∈ S_e·x. x0 is the first point,
/// in input order, that some generator moves, and d(z, x) = supdist(x0, S_e·x).
/// When every point is fixed this falls back to the constant extension with
/// c = diam(X) + 1. Throws UnboundedOrbitError naming the first point whose
/// orbit does not close within budget.
ExtendedSpace build_fixed_point_extension(const FiniteMetricSpace& space, const SemigroupAction& action,
                                          std::size_t budget);

/// The action on X ∪ {z} with z fixed by every generator.
SemigroupAction extend_action(const SemigroupAction& action);

/// Full check of an extension against an action. `action` may be defined on
/// X (z is then taken as fixed) or on X ∪ {z}, in which case z's images are
/// checked as given. Covers the metric axioms on the union with the two
/// triangle cases through z reported separately, positivity of d(·, z),
/// fixedness of z, non-expansivity including at z, and the inclusion.
ValidationReport validate_extension(const ExtendedSpace& ext, const SemigroupAction& action);

/// diam(S_e·x) <= 2 d(x, z) for every base point. Inconclusive when an orbit
/// does not close within budget.
ValidationReport check_diam_bound(const ExtendedSpace& ext, const SemigroupAction& action,
                                  std::size_t budget);

}  // namespace semilin

#endif  // SEMILIN_EXTENSION_HPP
