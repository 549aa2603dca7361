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

#include "semilin/rule.hpp"

#include "semilin/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace semilin {

struct IntRule::Node {
  enum class Kind { Literal, Var, Neg, Add, Sub, Mul, Min, Max, Abs, Clamp };
  Kind kind;
  long long value = 0;
  std::size_t var = 0;
  std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using Node = IntRule::Node;
using NodePtr = std::shared_ptr<const Node>;

struct Token {
  enum class Kind { Int, Ident, Arrow, LParen, RParen, Comma, Plus, Minus, Star, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Kind::Int, std::string(src.substr(i, j - i)), i});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Token::Kind::Ident, std::string(src.substr(i, j - i)), i});
      i = j;
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Token::Kind::Arrow, "->", i});
      i += 2;
    } else {
      Token::Kind k;
      switch (c) {
        case '(': k = Token::Kind::LParen; break;
        case ')': k = Token::Kind::RParen; break;
        case ',': k = Token::Kind::Comma; break;
        case '+': k = Token::Kind::Plus; break;
        case '-': k = Token::Kind::Minus; break;
        case '*': k = Token::Kind::Star; break;
        default:
          throw StructuralError("rule '" + std::string(src) + "': unexpected character '" +
                                std::string(1, c) + "' at " + std::to_string(i));
      }
      out.push_back({k, std::string(1, c), i});
      ++i;
    }
  }
  out.push_back({Token::Kind::End, "", src.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, std::vector<Token> tokens) : src_(src), tokens_(std::move(tokens)) {}

  std::vector<std::string> params() {
    std::vector<std::string> names;
    if (accept(Token::Kind::LParen)) {
      do {
        names.push_back(expect(Token::Kind::Ident, "parameter name").text);
      } while (accept(Token::Kind::Comma));
      expect(Token::Kind::RParen, "')'");
    } else {
      names.push_back(expect(Token::Kind::Ident, "parameter name").text);
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (std::find(names.begin(), names.begin() + i, names[i]) != names.begin() + i) {
        fail("duplicate parameter '" + names[i] + "'");
      }
    }
    params_ = names;
    expect(Token::Kind::Arrow, "'->'");
    return names;
  }

  std::vector<NodePtr> outputs() {
    // A parenthesized list is a tuple only if it is the whole output.
    const std::size_t mark = pos_;
    if (accept(Token::Kind::LParen)) {
      std::vector<NodePtr> items{expr()};
      while (accept(Token::Kind::Comma)) items.push_back(expr());
      if (accept(Token::Kind::RParen) && peek().kind == Token::Kind::End) return items;
      pos_ = mark;
    }
    std::vector<NodePtr> single{expr()};
    if (peek().kind != Token::Kind::End) fail("trailing input");
    return single;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  bool accept(Token::Kind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  const Token& expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k) fail("expected " + what);
    return tokens_[pos_++];
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw StructuralError("rule '" + std::string(src_) + "': " + msg + " at " +
                          std::to_string(peek().pos));
  }

  static NodePtr make(Node::Kind kind, std::vector<NodePtr> args) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->args = std::move(args);
    return n;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept(Token::Kind::Plus)) {
        lhs = make(Node::Kind::Add, {lhs, term()});
      } else if (accept(Token::Kind::Minus)) {
        lhs = make(Node::Kind::Sub, {lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (accept(Token::Kind::Star)) lhs = make(Node::Kind::Mul, {lhs, unary()});
    return lhs;
  }

  NodePtr unary() {
    if (accept(Token::Kind::Minus)) return make(Node::Kind::Neg, {unary()});
    return primary();
  }

  NodePtr primary() {
    if (peek().kind == Token::Kind::Int) {
      const auto& tok = tokens_[pos_++];
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Literal;
      const auto res = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), n->value);
      if (res.ec != std::errc{}) fail("integer literal out of range");
      return n;
    }
    if (peek().kind == Token::Kind::Ident) {
      const auto& tok = tokens_[pos_++];
      if (accept(Token::Kind::LParen)) return call(tok.text);
      const auto it = std::find(params_.begin(), params_.end(), tok.text);
      if (it == params_.end()) fail("unknown variable '" + tok.text + "'");
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Var;
      n->var = static_cast<std::size_t>(it - params_.begin());
      return n;
    }
    if (accept(Token::Kind::LParen)) {
      NodePtr inner = expr();
      expect(Token::Kind::RParen, "')'");
      return inner;
    }
    fail("expected expression");
  }

  NodePtr call(const std::string& fn) {
    std::vector<NodePtr> args{expr()};
    while (accept(Token::Kind::Comma)) args.push_back(expr());
    expect(Token::Kind::RParen, "')'");
    if (fn == "min" || fn == "max") {
      if (args.size() < 2) fail(fn + " needs at least two arguments");
      return make(fn == "min" ? Node::Kind::Min : Node::Kind::Max, std::move(args));
    }
    if (fn == "abs") {
      if (args.size() != 1) fail("abs takes one argument");
      return make(Node::Kind::Abs, std::move(args));
    }
    if (fn == "clamp") {
      if (args.size() != 3) fail("clamp takes three arguments");
      return make(Node::Kind::Clamp, std::move(args));
    }
    fail("unknown function '" + fn + "'");
  }

  std::string_view src_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string> params_;
};

void check_overflow(bool overflow) {
  if (overflow) throw StructuralError("integer overflow while evaluating rule");
}

template <class Op>
long long checked(Op op, long long a, long long b) {
  long long r = 0;
  check_overflow(op(a, b, &r));
  return r;
}

bool add(long long a, long long b, long long* r) { return __builtin_add_overflow(a, b, r); }
bool sub(long long a, long long b, long long* r) { return __builtin_sub_overflow(a, b, r); }
bool mul(long long a, long long b, long long* r) { return __builtin_mul_overflow(a, b, r); }

long long eval(const Node& n, const IntPoint& env) {
  switch (n.kind) {
    case Node::Kind::Literal:
      return n.value;
    case Node::Kind::Var:
      return env[n.var];
    case Node::Kind::Neg: {
      return checked(sub, 0, eval(*n.args[0], env));
    }
    case Node::Kind::Add:
      return checked(add, eval(*n.args[0], env), eval(*n.args[1], env));
    case Node::Kind::Sub:
      return checked(sub, eval(*n.args[0], env), eval(*n.args[1], env));
    case Node::Kind::Mul:
      return checked(mul, eval(*n.args[0], env), eval(*n.args[1], env));
    case Node::Kind::Min:
    case Node::Kind::Max: {
      long long best = eval(*n.args[0], env);
      for (std::size_t i = 1; i < n.args.size(); ++i) {
        const long long v = eval(*n.args[i], env);
        best = n.kind == Node::Kind::Min ? std::min(best, v) : std::max(best, v);
      }
      return best;
    }
    case Node::Kind::Abs: {
      const long long v = eval(*n.args[0], env);
      check_overflow(v == std::numeric_limits<long long>::min());
      return v < 0 ? -v : v;
    }
    case Node::Kind::Clamp: {
      const long long v = eval(*n.args[0], env);
      const long long lo = eval(*n.args[1], env);
      const long long hi = eval(*n.args[2], env);
      if (lo > hi) throw StructuralError("clamp with empty range");
      return std::clamp(v, lo, hi);
    }
  }
  return 0;
}

}  // namespace

IntRule IntRule::parse(std::string_view source) {
  Parser parser(source, tokenize(source));
  IntRule rule;
  rule.source_ = std::string(source);
  rule.params_ = parser.params();
  rule.outputs_ = parser.outputs();
  if (rule.outputs_.size() != rule.params_.size()) {
    throw StructuralError("rule '" + rule.source_ + "' maps " + std::to_string(rule.params_.size()) +
                          " coordinates to " + std::to_string(rule.outputs_.size()));
  }
  return rule;
}

IntPoint IntRule::operator()(const IntPoint& point) const {
  if (point.size() != params_.size()) {
    throw StructuralError("rule '" + source_ + "' applied to " + point_name(point) +
                          " of dimension " + std::to_string(point.size()));
  }
  IntPoint out;
  out.reserve(outputs_.size());
  for (const auto& node : outputs_) out.push_back(eval(*node, point));
  return out;
}

}  // namespace semilin
