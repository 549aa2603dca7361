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

#ifndef SEMILIN_ARENS_EELLS_HPP
#define SEMILIN_ARENS_EELLS_HPP

#include "semilin/action.hpp"
#include "semilin/metric.hpp"
#include "semilin/report.hpp"

#include <map>
#include <vector>

namespace semilin {

/// Arens–Eells space A(X) over a pointed finite metric space.
///
/// Elements are presented as formal combinations sum c_i (x_i - y_i) and
/// compared through their reduced signed mass. The norm is the cheapest
/// representation, computed as a transport problem between the positive
/// and negative parts of the mass, and comes with a primal witness (a
/// transport plan, i.e. an explicit cheap representation) and a dual
/// witness (a 1-Lipschitz function attaining the same value).

/// A finite metric space together with its base point.
struct PointedSpace {
  const FiniteMetricSpace& space;
  PointIndex base;
};

struct Term {
  Scalar c;
  PointIndex x;
  PointIndex y;
};

struct FormalCombination {
  std::vector<Term> terms;
};

/// Point masses with zero entries dropped. Every reduced combination has
/// total mass zero.
class SignedMass {
 public:
  SignedMass() = default;

  void add(PointIndex p, const Scalar& amount);

  [[nodiscard]] const std::map<PointIndex, Scalar>& entries() const noexcept { return mass_; }
  [[nodiscard]] bool empty() const noexcept { return mass_.empty(); }
  [[nodiscard]] Scalar at(PointIndex p) const;
  [[nodiscard]] Scalar total() const;

  SignedMass& operator+=(const SignedMass& other);
  friend SignedMass operator+(SignedMass a, const SignedMass& b) { return a += b; }
  [[nodiscard]] SignedMass scaled(const Scalar& c) const;

  friend bool operator==(const SignedMass& a, const SignedMass& b);

 private:
  std::map<PointIndex, Scalar> mass_;
};

struct Flow {
  PointIndex from;
  PointIndex to;
  Scalar amount;
};

struct TransportPlan {
  std::vector<Flow> flows;

  [[nodiscard]] Scalar cost(const FiniteMetricSpace& space) const;
  /// Net outflow per point.
  [[nodiscard]] SignedMass divergence() const;
};

struct LipschitzPotential {
  std::map<PointIndex, Scalar> values;
};

struct NormResult {
  Scalar value;
  TransportPlan plan;
  LipschitzPotential potential;
};

SignedMass reduce(const FormalCombination& u);

/// Exact norm with primal and dual witnesses. The potential is defined on
/// the support and the base point and normalised to vanish at the base.
/// Throws StructuralError for points outside the space.
NormResult ae_norm(const FormalCombination& u, PointedSpace pointed);
NormResult ae_norm(const SignedMass& mass, PointedSpace pointed);

/// x -> 1·(x - base); the zero combination when x is the base point.
FormalCombination embed(PointIndex x, PointedSpace pointed);

/// Termwise image under the word w (rightmost letter first). The action
/// must be defined on the whole pointed space.
FormalCombination apply_action(const Word& w, const FormalCombination& u, const SemigroupAction& action);

/// Independent re-check of a NormResult: 1-Lipschitz potential, plan
/// divergence equal to the reduced mass, plan cost and dual value both equal
/// to the claimed value.
ValidationReport verify_dual_certificate(const FormalCombination& u, const NormResult& claimed,
                                         PointedSpace pointed);

}  // namespace semilin

#endif  // SEMILIN_ARENS_EELLS_HPP
