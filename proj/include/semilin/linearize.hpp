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

#ifndef SEMILIN_LINEARIZE_HPP
#define SEMILIN_LINEARIZE_HPP

#include "semilin/action.hpp"
#include "semilin/arens_eells.hpp"
#include "semilin/extension.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace semilin {

struct LinearizeConfig {
  /// Random (word, combination) pairs used for the contraction certificate.
  std::size_t contraction_samples = 32;
  std::size_t max_word_length = 4;
  std::uint64_t seed = 0;
};

struct Certificate {
  std::string claim;
  bool ok = false;
  std::string witness;
};

struct EmbeddingEntry {
  PointIndex point;
  SignedMass mass;
  NormResult norm;
};

/// Why no linearization was produced: the orbit of `point` did not close.
struct Refusal {
  std::string point;
  std::size_t budget = 0;
  std::size_t reached = 0;
  Scalar diameter_so_far;
};

/// Everything produced by the pipeline, in a form that can be re-checked
/// from its own data.
///
/// `action` acts on X ∪ {z} (z last). `linear_action[g][x]` is the reduced
/// mass of g·embed(x), i.e. column x of the induced operator restricted to
/// span{embed(x)}.
struct LinearizationBundle {
  static constexpr int kFormatVersion = 1;

  std::size_t budget = 0;
  LinearizeConfig config;
  std::optional<Refusal> refusal;
  std::optional<ExtendedSpace> extended;
  std::optional<SemigroupAction> action;
  std::vector<EmbeddingEntry> embedding;
  std::vector<std::vector<SignedMass>> linear_action;
  std::vector<Certificate> certificates;

  /// True iff not refused, at least one certificate, and every certificate ok.
  [[nodiscard]] bool certified() const;
};

/// Orbits, fixed-point extension, Arens–Eells embedding and every
/// certificate. Orbits that do not close within budget yield a refusal
/// bundle naming the first such point. Only structural input errors throw.
LinearizationBundle linearize(const FiniteMetricSpace& space, const SemigroupAction& action,
                              std::size_t budget, const LinearizeConfig& config);

/// Same on an implicit space: the materialized closure of the seeds is
/// linearized once every seed orbit has closed.
LinearizationBundle linearize(const ImplicitMetricSpace& space, const ImplicitAction& action,
                              std::size_t budget, const LinearizeConfig& config);

/// Recomputes every certificate from the bundle's raw data, ignoring the
/// stored certificate list. Each failing claim becomes a violation whose
/// axiom is the claim name. Refused bundles are reported inconclusive.
ValidationReport certify(const LinearizationBundle& bundle);

/// The certificate list a bundle's raw data supports.
std::vector<Certificate> compute_certificates(const LinearizationBundle& bundle);

}  // namespace semilin

#endif  // SEMILIN_LINEARIZE_HPP
