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

#ifndef SEMILIN_REPORT_HPP
#define SEMILIN_REPORT_HPP

#include "semilin/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace semilin {

/// One failed check, with the points that witness it and the values compared.
struct Violation {
  std::string axiom;
  std::vector<std::string> witnesses;
  std::vector<Scalar> values;
  std::string detail;
};

/// Outcome of a checking operation.
///
/// A report is ok when it has no violations and is not inconclusive.
/// Inconclusive means a precondition for deciding (closed orbits, usually)
/// was not met; it is never evidence of a violation.
struct ValidationReport {
  std::vector<Violation> violations;
  std::optional<std::string> inconclusive;
  std::vector<std::string> notes;

  [[nodiscard]] bool ok() const { return violations.empty() && !inconclusive; }

  [[nodiscard]] bool has(std::string_view axiom) const {
    for (const auto& v : violations) {
      if (v.axiom == axiom) return true;
    }
    return false;
  }

  void add(Violation v) { violations.push_back(std::move(v)); }

  void merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    if (other.inconclusive && !inconclusive) inconclusive = other.inconclusive;
  }
};

}  // namespace semilin

#endif  // SEMILIN_REPORT_HPP
