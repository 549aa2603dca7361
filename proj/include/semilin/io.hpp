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

#ifndef SEMILIN_IO_HPP
#define SEMILIN_IO_HPP

// JSON formats.
//
//   space      {"points": ["a","b"], "dist": [["a","b","3/2"], ...]}
//   implicit   {"implicit": {"dimension": 1, "metric": "l1"}, "seeds": [[0]]}
//   action     {"monoid": true, "generators": [{"name": "s", "map": {"a": "b", "b": "b"}}]}
//              implicit generators use a rule string: {"name": "s", "map": "n -> n+1"}
//   combination {"terms": [{"c": "3/2", "x": "p0", "y": "p2"}]}
//   extension  space format with "__z" among the points plus
//              {"z": "__z", "provenance": {...}}
//
// Exact values are written as "p/q" or "n" strings. Integers are accepted as
// JSON numbers; fractional JSON numbers only in float mode.

#include "semilin/action.hpp"
#include "semilin/arens_eells.hpp"
#include "semilin/extension.hpp"
#include "semilin/linearize.hpp"
#include "semilin/metric.hpp"
#include "semilin/report.hpp"

#include <json.hpp>

#include <optional>
#include <variant>

namespace semilin::io {

using nlohmann::json;

Scalar scalar_from_json(const json& j, const NumericMode& mode);
json to_json(const Scalar& s);

/// A parsed space file. `z` is set when the file is an extension output.
struct SpaceDocument {
  std::variant<FiniteMetricSpace, ImplicitMetricSpace> space;
  std::optional<PointIndex> z;

  [[nodiscard]] bool is_finite() const { return std::holds_alternative<FiniteMetricSpace>(space); }
  [[nodiscard]] const FiniteMetricSpace& finite() const;
  [[nodiscard]] const ImplicitMetricSpace& implicit() const;
};

/// Throws StructuralError on malformed documents, missing pairs and use of
/// the reserved name "__z" outside extension files.
SpaceDocument parse_space(const json& j, const NumericMode& mode);

json space_to_json(const FiniteMetricSpace& space);

/// Maps must be total on the space's points. On an extension file a map
/// that omits "__z" fixes it.
SemigroupAction parse_action(const json& j, const FiniteMetricSpace& space);
ImplicitAction parse_implicit_action(const json& j);
json action_to_json(const SemigroupAction& action, const FiniteMetricSpace& space);

FormalCombination parse_combination(const json& j, const FiniteMetricSpace& space, const NumericMode& mode);
json combination_to_json(const FormalCombination& u, const FiniteMetricSpace& space);

/// "0", "(1,2)" or "1,2" to an integer tuple.
IntPoint parse_int_point(std::string_view text);

json to_json(const ValidationReport& report);
json to_json(const FiniteOrbit& orbit, const FiniteMetricSpace& space);
json to_json(const ImplicitOrbit& orbit);
json mass_to_json(const SignedMass& mass, const FiniteMetricSpace& space);
SignedMass mass_from_json(const json& j, const FiniteMetricSpace& space, const NumericMode& mode);
json to_json(const NormResult& norm, const FiniteMetricSpace& space);
NormResult norm_from_json(const json& j, const FiniteMetricSpace& space, const NumericMode& mode);

json extension_to_json(const ExtendedSpace& ext);
ExtendedSpace extension_from_json(const json& j, const NumericMode& mode);

/// Canonical bundle document; identical bundles serialize to identical bytes.
json bundle_to_json(const LinearizationBundle& bundle);
LinearizationBundle bundle_from_json(const json& j);

}  // namespace semilin::io

#endif  // SEMILIN_IO_HPP
