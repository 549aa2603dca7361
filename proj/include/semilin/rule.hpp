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

#ifndef SEMILIN_RULE_HPP
#define SEMILIN_RULE_HPP

#include "semilin/metric.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace semilin {

/// A map on integer tuples written as a small expression, e.g.
///
///     n -> n+1
///     (m, n) -> (n, m)
///     n -> min(n+1, 10)
///     (x, y) -> (clamp(x-1, 0, 5), -y)
///
/// Expressions support integer literals, the bound variables, + - * and
/// unary minus, parentheses, and the functions min, max (two or more
/// arguments), abs and clamp(v, lo, hi). Arithmetic is checked for
/// overflow. Parse and evaluation errors raise StructuralError.
class IntRule {
 public:
  static IntRule parse(std::string_view source);

  [[nodiscard]] std::size_t arity() const noexcept { return params_.size(); }
  [[nodiscard]] const std::string& source() const noexcept { return source_; }

  [[nodiscard]] IntPoint operator()(const IntPoint& point) const;

  struct Node;

 private:
  std::string source_;
  std::vector<std::string> params_;
  std::vector<std::shared_ptr<const Node>> outputs_;
};

}  // namespace semilin

#endif  // SEMILIN_RULE_HPP
