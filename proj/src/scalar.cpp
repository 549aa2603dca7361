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

#include "semilin/scalar.hpp"

#include "semilin/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace semilin {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

cpp_int parse_integer(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) {
    throw StructuralError("malformed number '" + std::string(whole) + "'");
  }
  cpp_int value{std::string(text)};
  return negative ? cpp_int(-value) : value;
}

}  // namespace

Scalar Scalar::approx(double value, double tolerance) {
  if (!std::isfinite(value)) throw StructuralError("non-finite value");
  if (!(tolerance > 0.0)) throw StructuralError("tolerance must be positive");
  Scalar s;
  s.value_ = Approx{value, tolerance};
  return s;
}

Scalar Scalar::parse(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw StructuralError("empty number");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const cpp_int num = parse_integer(text.substr(0, slash), whole);
    const cpp_int den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw StructuralError("zero denominator in '" + std::string(whole) + "'");
    return Scalar(Rational(num, den));
  }

  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((!int_part.empty() && !all_digits(int_part)) || !all_digits(frac_part)) {
      throw StructuralError("malformed number '" + std::string(whole) + "'");
    }
    const cpp_int digits(std::string(int_part) + std::string(frac_part));
    cpp_int scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    Rational r(digits, scale);
    return Scalar(negative ? Rational(-r) : r);
  }

  return Scalar(Rational(parse_integer(text, whole)));
}

const Rational& Scalar::rational() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw std::logic_error("Scalar::rational on an approximate value");
}

double Scalar::to_double() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->convert_to<double>();
  return std::get<Approx>(value_).value;
}

double Scalar::tolerance() const noexcept {
  if (const auto* a = std::get_if<Approx>(&value_)) return a->tolerance;
  return 0.0;
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Rational>(&value_)) {
    const auto num = boost::multiprecision::numerator(*r);
    const auto den = boost::multiprecision::denominator(*r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), std::get<Approx>(value_).value);
  return std::string(buf, res.ptr);
}

int Scalar::sign() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->sign();
  const auto& a = std::get<Approx>(value_);
  if (std::abs(a.value) <= a.tolerance) return 0;
  return a.value < 0 ? -1 : 1;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto* r = std::get_if<Rational>(&out.value_)) {
    *r = -*r;
  } else {
    auto& a = std::get<Approx>(out.value_);
    a.value = -a.value;
  }
  return out;
}

template <class ExactOp, class ApproxOp>
Scalar& Scalar::combine(const Scalar& rhs, ExactOp exact, ApproxOp approx) {
  if (is_exact() && rhs.is_exact()) {
    exact(std::get<Rational>(value_), std::get<Rational>(rhs.value_));
    return *this;
  }
  const double tol = std::max(tolerance(), rhs.tolerance());
  value_ = Approx{approx(to_double(), rhs.to_double()), tol};
  return *this;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  return combine(rhs, [](Rational& a, const Rational& b) { a += b; },
                 [](double a, double b) { return a + b; });
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  return combine(rhs, [](Rational& a, const Rational& b) { a -= b; },
                 [](double a, double b) { return a - b; });
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  return combine(rhs, [](Rational& a, const Rational& b) { a *= b; },
                 [](double a, double b) { return a * b; });
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  return combine(
      rhs,
      [](Rational& a, const Rational& b) {
        if (b == 0) throw std::domain_error("division by zero");
        a /= b;
      },
      [](double a, double b) { return a / b; });
}

int compare(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) {
    const auto& ra = std::get<Rational>(a.value_);
    const auto& rb = std::get<Rational>(b.value_);
    return ra < rb ? -1 : (rb < ra ? 1 : 0);
  }
  const double x = a.to_double();
  const double y = b.to_double();
  const double tol = std::max(a.tolerance(), b.tolerance());
  if (std::abs(x - y) <= tol * (1.0 + std::max(std::abs(x), std::abs(y)))) return 0;
  return x < y ? -1 : 1;
}

Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }

Scalar NumericMode::lift(const Scalar& value) const {
  if (exact) return value;
  return Scalar::approx(value.to_double(), tolerance);
}

}  // namespace semilin
