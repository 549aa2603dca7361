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

#ifndef SEMILIN_ACTION_HPP
#define SEMILIN_ACTION_HPP

#include "semilin/metric.hpp"
#include "semilin/report.hpp"
#include "semilin/rule.hpp"

#include <string>
#include <vector>

namespace semilin {

/// Translation map of one generator, as a table over point indices.
struct GeneratorMap {
  std::string name;
  std::vector<PointIndex> image;
};

/// Generator word, written left to right as in s·t·u and applied right to
/// left: the last letter acts first.
using Word = std::vector<std::size_t>;

/// A finitely generated semigroup (or monoid) acting on a finite space.
///
/// Semigroup elements are never materialized; everything is evaluated one
/// generator at a time. Elements are the nonempty words, plus the empty
/// word when has_identity() is set.
class SemigroupAction {
 public:
  /// Throws StructuralError when `generators` is empty, names repeat, or the
  /// tables have different sizes or point outside the domain.
  SemigroupAction(std::vector<GeneratorMap> generators, bool has_identity);

  [[nodiscard]] bool has_identity() const noexcept { return has_identity_; }
  [[nodiscard]] std::size_t generator_count() const noexcept { return generators_.size(); }
  [[nodiscard]] const GeneratorMap& generator(std::size_t g) const { return generators_.at(g); }
  [[nodiscard]] const std::vector<GeneratorMap>& generators() const noexcept { return generators_; }
  /// Number of points the tables are defined on.
  [[nodiscard]] std::size_t domain_size() const noexcept { return generators_.front().image.size(); }

  [[nodiscard]] PointIndex apply(std::size_t g, PointIndex x) const { return generators_[g].image[x]; }

  /// Throws PreconditionError for the empty word on a plain semigroup.
  [[nodiscard]] PointIndex apply(const Word& w, PointIndex x) const;

 private:
  std::vector<GeneratorMap> generators_;
  bool has_identity_;
};

/// Same action with the identity adjoined (free monoid over S). Idempotent.
SemigroupAction adjoin_identity(const SemigroupAction& action);

/// Every word of length 1..max_length (plus the empty word for monoids),
/// in shortlex order.
std::vector<Word> enumerate_words(const SemigroupAction& action, std::size_t max_length);

enum class OrbitStatus { Closed, BudgetExhausted };

/// S·base as far as enumeration got.
///
/// Closed: `points` is exactly the orbit and `diameter_so_far` its diameter.
/// BudgetExhausted: `points` is a subset of the orbit and `diameter_so_far`
/// a lower bound on its diameter. It never means "unbounded".
template <class Point>
struct OrbitResult {
  Point base;
  std::vector<Point> points;
  OrbitStatus status = OrbitStatus::Closed;
  Scalar diameter_so_far;
  std::size_t budget_used = 0;

  [[nodiscard]] bool closed() const noexcept { return status == OrbitStatus::Closed; }
};

using FiniteOrbit = OrbitResult<PointIndex>;

/// Checks d(g·x, g·y) <= d(x,y) for every generator and every pair. Words
/// need no separate check: compositions of non-expansive maps are
/// non-expansive. Throws StructuralError when the action and space sizes
/// differ.
ValidationReport check_non_expansive(const SemigroupAction& action, const FiniteMetricSpace& space);

/// Breadth-first orbit closure. Starts from the generator images of x (and
/// x itself for monoids) and stops as soon as one more point would exceed
/// `budget`. Throws PreconditionError for budget == 0.
FiniteOrbit orbit(PointIndex x, const SemigroupAction& action, const FiniteMetricSpace& space,
                  std::size_t budget);

/// Points fixed by every generator (hence by every word).
std::vector<PointIndex> find_fixed_points(const SemigroupAction& action);

/// diam(S·y) <= 2 d(x,y) + diam(S·x). Inconclusive when either orbit is
/// not closed within budget.
ValidationReport check_orbit_transfer(PointIndex x, PointIndex y, const SemigroupAction& action,
                                        const FiniteMetricSpace& space, std::size_t budget);

// ---------------------------------------------------------------------------
// Actions on implicit spaces.

struct SymbolicGenerator {
  std::string name;
  IntRule rule;
};

struct ImplicitAction {
  std::vector<SymbolicGenerator> generators;
  bool has_identity = false;
};

using ImplicitOrbit = OrbitResult<IntPoint>;

/// Orbit in an implicit space. When the budget runs out the reported
/// diameter is max d(p, q) over reached q for the first reached point p,
/// which is a lower bound on the orbit diameter.
ImplicitOrbit orbit(const IntPoint& x, const ImplicitAction& action, const ImplicitMetricSpace& space,
                    std::size_t budget);

/// Seeds plus everything reachable from them, up to `budget` points.
struct Materialized {
  std::vector<IntPoint> points;
  bool complete = false;
};

Materialized materialize_closure(const ImplicitAction& action, const ImplicitMetricSpace& space,
                                 std::size_t budget);

/// Non-expansivity on all pairs of the materialized subset. The report
/// notes how many points were checked and whether the closure completed.
ValidationReport check_non_expansive(const ImplicitAction& action, const ImplicitMetricSpace& space,
                                     std::size_t budget);

/// Fixed points among the materialized subset.
std::vector<IntPoint> find_fixed_points(const ImplicitAction& action, const ImplicitMetricSpace& space,
                                        std::size_t budget);

/// Finite space and table action on the materialized closure of the seeds.
/// Throws UnboundedOrbitError naming the first seed whose orbit does not
/// close within budget.
std::pair<FiniteMetricSpace, SemigroupAction> to_finite(const ImplicitAction& action,
                                                        const ImplicitMetricSpace& space,
                                                        std::size_t budget);

}  // namespace semilin

#endif  // SEMILIN_ACTION_HPP
