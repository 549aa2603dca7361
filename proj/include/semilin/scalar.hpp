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

#ifndef SEMILIN_SCALAR_HPP
#define SEMILIN_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <string>
#include <string_view>
#include <variant>

namespace semilin {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr double kDefaultTolerance = 1e-9;

/// A distance or coefficient value.
///
/// A Scalar is either an exact rational or a double carrying its own
/// comparison tolerance. Arithmetic between two exact values stays exact;
/// as soon as one operand is approximate the result is approximate and
/// inherits the larger tolerance.
///
/// Comparisons between exact values are exact. Otherwise two values are
/// considered equal when |a - b| <= tol * (1 + max(|a|, |b|)), and the
/// strict orderings only hold outside that band.
class Scalar {
 public:
  Scalar() = default;

  template <std::integral I>
  Scalar(I value) : value_(Rational(static_cast<long long>(value))) {}  // NOLINT

  Scalar(Rational value) : value_(std::move(value)) {}  // NOLINT

  static Scalar approx(double value, double tolerance = kDefaultTolerance);

  /// Parses "p/q", an integer, or a finite decimal such as "-1.25" into an
  /// exact rational. Throws StructuralError on malformed text or q == 0.
  static Scalar parse(std::string_view text);

  [[nodiscard]] bool is_exact() const noexcept {
    return std::holds_alternative<Rational>(value_);
  }

  /// Throws std::logic_error when the value is approximate.
  [[nodiscard]] const Rational& rational() const;

  [[nodiscard]] double to_double() const;

  /// 0 for exact values.
  [[nodiscard]] double tolerance() const noexcept;

  /// Canonical text: "p/q" in lowest terms, or "n" for integers. Approximate
  /// values print as the shortest round-trip decimal.
  [[nodiscard]] std::string to_string() const;

  /// -1, 0 or 1, with 0 meaning "equal within tolerance" for approximate values.
  [[nodiscard]] int sign() const;
  [[nodiscard]] bool is_zero() const { return sign() == 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  /// Throws std::domain_error on exact division by zero.
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend int compare(const Scalar& a, const Scalar& b);

  friend bool operator==(const Scalar& a, const Scalar& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return compare(a, b) != 0; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return compare(a, b) >= 0; }

 private:
  struct Approx {
    double value;
    double tolerance;
  };

  template <class ExactOp, class ApproxOp>
  Scalar& combine(const Scalar& rhs, ExactOp exact, ApproxOp approx);

  std::variant<Rational, Approx> value_;
};

Scalar abs(const Scalar& x);
const Scalar& max(const Scalar& a, const Scalar& b);
const Scalar& min(const Scalar& a, const Scalar& b);

/// How textual/JSON inputs are turned into Scalars.
struct NumericMode {
  bool exact = true;
  double tolerance = kDefaultTolerance;

  [[nodiscard]] Scalar lift(const Scalar& value) const;
};

}  // namespace semilin

#endif  // SEMILIN_SCALAR_HPP
