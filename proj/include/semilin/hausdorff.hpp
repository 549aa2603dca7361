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

#ifndef SEMILIN_HAUSDORFF_HPP
#define SEMILIN_HAUSDORFF_HPP

#include "semilin/action.hpp"
#include "semilin/metric.hpp"
#include "semilin/report.hpp"

#include <span>
#include <vector>

namespace semilin {

/// A nonempty finite subset, kept sorted and without duplicates.
class BoundedSubset {
 public:
  /// Throws PreconditionError when empty, StructuralError for indices
  /// outside the space.
  BoundedSubset(std::vector<PointIndex> elements, const FiniteMetricSpace& space);

  [[nodiscard]] std::span<const PointIndex> elements() const noexcept { return elements_; }

  /// Elementwise image under generator g.
  [[nodiscard]] BoundedSubset image(const SemigroupAction& action, std::size_t g,
                                    const FiniteMetricSpace& space) const;

  friend bool operator==(const BoundedSubset&, const BoundedSubset&) = default;

 private:
  std::vector<PointIndex> elements_;
};

/// max(sup_a d(a, B), sup_b d(A, b)) with d(a, B) = min_b d(a, b).
Scalar hausdorff_dist(const BoundedSubset& a, const BoundedSubset& b, const FiniteMetricSpace& space);

/// True when every generator is a bijection whose inverse is non-expansive,
/// i.e. an isometry, so the generated monoid is a finite group.
bool is_isometric_group(const SemigroupAction& action, const FiniteMetricSpace& space);

/// Identification of the fixed-point extension with singletons plus the
/// orbit S·x0 inside the hyperspace of bounded subsets. Checks
/// d_H({x},{y}) = d(x,y), d_H({x}, S·x0) = d(x,z) and that S·x0 is fixed by
/// the elementwise action. When every point is fixed only the singleton
/// check applies. Throws PreconditionError unless is_isometric_group holds.
ValidationReport check_group_identification(const FiniteMetricSpace& space, const SemigroupAction& action,
                                            std::size_t budget);

/// For any action: whether S_e·x0 is fixed by the elementwise action of each
/// generator. Failures are reported as "orbit-not-fixed"; for non-group
/// actions they are expected, not defects.
ValidationReport check_orbit_fixed_under_subsets(const FiniteMetricSpace& space,
                                                 const SemigroupAction& action, std::size_t budget);

}  // namespace semilin

#endif  // SEMILIN_HAUSDORFF_HPP
