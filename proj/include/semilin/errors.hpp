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

#ifndef SEMILIN_ERRORS_HPP
#define SEMILIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semilin {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: missing table entries, unknown point names, partial maps,
/// unparsable rules. Never used for axiom violations, which go in reports.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Orbit enumeration ran out of budget, so boundedness is not certified.
class UnboundedOrbitError : public Error {
 public:
  UnboundedOrbitError(std::string point, std::size_t budget)
      : Error("orbit of '" + point + "' not closed within budget " + std::to_string(budget)),
        point_(std::move(point)),
        budget_(budget) {}

  [[nodiscard]] const std::string& point() const noexcept { return point_; }
  [[nodiscard]] std::size_t budget() const noexcept { return budget_; }

 private:
  std::string point_;
  std::size_t budget_;
};

/// An internal invariant failed. Indicates a defect in this library.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace semilin

#endif  // SEMILIN_ERRORS_HPP
