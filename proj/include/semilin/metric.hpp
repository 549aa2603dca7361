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

#ifndef SEMILIN_METRIC_HPP
#define SEMILIN_METRIC_HPP

#include "semilin/report.hpp"
#include "semilin/scalar.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace semilin {

using PointIndex = std::size_t;

/// A finite point set with a full distance table.
///
/// The table is stored in both orders so that asymmetric input survives
/// construction and can be reported by validate_metric. Construction checks
/// structure only (names unique, table complete); the metric axioms are
/// checked separately.
class FiniteMetricSpace {
 public:
  using Entry = std::tuple<std::string, std::string, Scalar>;

  FiniteMetricSpace() = default;

  /// `table` is row-major, names.size() squared entries.
  FiniteMetricSpace(std::vector<std::string> names, std::vector<Scalar> table);

  /// Builds from unordered entries. A pair given in one order is mirrored;
  /// given in both orders it is kept as given. Diagonal entries default to 0.
  /// Throws StructuralError on a missing pair, unknown or duplicate name.
  static FiniteMetricSpace from_entries(std::vector<std::string> names,
                                        const std::vector<Entry>& entries);

  [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
  [[nodiscard]] const std::string& name(PointIndex i) const { return names_.at(i); }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
  [[nodiscard]] std::optional<PointIndex> find(std::string_view name) const;
  /// Throws StructuralError for unknown names.
  [[nodiscard]] PointIndex index_of(std::string_view name) const;

  [[nodiscard]] const Scalar& dist(PointIndex i, PointIndex j) const {
    return table_[i * names_.size() + j];
  }

  /// Sub-space on the given points, in the given order.
  [[nodiscard]] FiniteMetricSpace restrict_to(std::span<const PointIndex> points) const;

 private:
  std::vector<std::string> names_;
  std::vector<Scalar> table_;
  std::unordered_map<std::string, PointIndex> index_;
};

/// Checks zero diagonal, positivity, symmetry and every triangle inequality.
ValidationReport validate_metric(const FiniteMetricSpace& space);

/// max over A of d(x, y). Throws PreconditionError when A is empty.
Scalar supdist(PointIndex x, std::span<const PointIndex> set, const FiniteMetricSpace& space);

/// Largest pairwise distance in A; 0 for empty sets and singletons.
Scalar diam(std::span<const PointIndex> set, const FiniteMetricSpace& space);

/// Diameter of the whole space.
Scalar diam(const FiniteMetricSpace& space);

// ---------------------------------------------------------------------------
// Implicit spaces over integer lattices.

using IntPoint = std::vector<long long>;

std::string point_name(const IntPoint& p);

using DistanceOracle = std::function<Scalar(const IntPoint&, const IntPoint&)>;

enum class LatticeMetric { L1, LInf, Discrete };

/// A possibly infinite space whose points are integer tuples.
///
/// Points are produced on demand (by seeds and generator rules); the oracle
/// is only ever asked about points that have been materialized, so axiom
/// checks are checks on the materialized finite subset.
class ImplicitMetricSpace {
 public:
  ImplicitMetricSpace(std::size_t dimension, std::vector<IntPoint> seeds, DistanceOracle oracle);

  static ImplicitMetricSpace lattice(std::size_t dimension, std::vector<IntPoint> seeds,
                                     LatticeMetric metric, NumericMode mode = {});

  [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }
  [[nodiscard]] const std::vector<IntPoint>& seeds() const noexcept { return seeds_; }

  /// Throws StructuralError naming the points when the oracle fails.
  [[nodiscard]] Scalar dist(const IntPoint& a, const IntPoint& b) const;

  [[nodiscard]] FiniteMetricSpace materialize(std::span<const IntPoint> points) const;

 private:
  std::size_t dimension_;
  std::vector<IntPoint> seeds_;
  DistanceOracle oracle_;
};

}  // namespace semilin

#endif  // SEMILIN_METRIC_HPP
