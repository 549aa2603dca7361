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

#include "semilin/arens_eells.hpp"

#include "semilin/errors.hpp"
#include "semilin/transport.hpp"

#include <set>

namespace semilin {

void SignedMass::add(PointIndex p, const Scalar& amount) {
  auto [it, inserted] = mass_.try_emplace(p, amount);
  if (!inserted) it->second += amount;
  if (it->second.is_zero()) mass_.erase(it);
}

Scalar SignedMass::at(PointIndex p) const {
  const auto it = mass_.find(p);
  return it == mass_.end() ? Scalar() : it->second;
}

Scalar SignedMass::total() const {
  Scalar t;
  for (const auto& [p, m] : mass_) t += m;
  return t;
}

SignedMass& SignedMass::operator+=(const SignedMass& other) {
  for (const auto& [p, m] : other.mass_) add(p, m);
  return *this;
}

SignedMass SignedMass::scaled(const Scalar& c) const {
  SignedMass out;
  for (const auto& [p, m] : mass_) out.add(p, c * m);
  return out;
}

bool operator==(const SignedMass& a, const SignedMass& b) {
  std::set<PointIndex> keys;
  for (const auto& [p, m] : a.mass_) keys.insert(p);
  for (const auto& [p, m] : b.mass_) keys.insert(p);
  for (auto p : keys) {
    if (a.at(p) != b.at(p)) return false;
  }
  return true;
}

Scalar TransportPlan::cost(const FiniteMetricSpace& space) const {
  Scalar c;
  for (const auto& f : flows) c += f.amount * space.dist(f.from, f.to);
  return c;
}

SignedMass TransportPlan::divergence() const {
  SignedMass out;
  for (const auto& f : flows) {
    out.add(f.from, f.amount);
    out.add(f.to, -f.amount);
  }
  return out;
}

SignedMass reduce(const FormalCombination& u) {
  SignedMass out;
  for (const auto& t : u.terms) {
    out.add(t.x, t.c);
    out.add(t.y, -t.c);
  }
  return out;
}

namespace {

void require_in_space(PointIndex p, const FiniteMetricSpace& space) {
  if (p >= space.size()) throw StructuralError("point index " + std::to_string(p) + " outside the space");
}

}  // namespace

NormResult ae_norm(const SignedMass& mass, PointedSpace pointed) {
  const auto& space = pointed.space;
  require_in_space(pointed.base, space);
  for (const auto& [p, m] : mass.entries()) require_in_space(p, space);
  if (!mass.total().is_zero()) throw PreconditionError("signed mass does not have total zero");

  NormResult result;
  if (mass.empty()) {
    result.potential.values[pointed.base] = Scalar();
    return result;
  }

  std::vector<PointIndex> sources;
  std::vector<PointIndex> sinks;
  TransportProblem problem;
  for (const auto& [p, m] : mass.entries()) {
    if (m.sign() > 0) {
      sources.push_back(p);
      problem.supply.push_back(m);
    } else {
      sinks.push_back(p);
      problem.demand.push_back(-m);
    }
  }
  for (auto p : sources) {
    for (auto q : sinks) problem.cost.push_back(space.dist(p, q));
  }
  const TransportSolution sol = solve_transport(problem);

  result.value = sol.cost;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    for (std::size_t j = 0; j < sinks.size(); ++j) {
      const Scalar& f = sol.flow[i * sinks.size() + j];
      if (f.sign() > 0) result.plan.flows.push_back({sources[i], sinks[j], f});
    }
  }

  // The basis duals only satisfy f(p) - f(q) <= d(p, q) across the bipartite
  // graph. Replacing them by x -> min_j (f(q_j) + d(x, q_j)) gives a function
  // that is 1-Lipschitz everywhere, no smaller on sources, no larger on
  // sinks, hence still optimal.
  std::vector<PointIndex> domain(sources);
  domain.insert(domain.end(), sinks.begin(), sinks.end());
  if (!mass.entries().count(pointed.base)) domain.push_back(pointed.base);
  for (auto x : domain) {
    Scalar best = -sol.col_potential[0] + space.dist(x, sinks[0]);
    for (std::size_t j = 1; j < sinks.size(); ++j) {
      best = min(best, -sol.col_potential[j] + space.dist(x, sinks[j]));
    }
    result.potential.values[x] = best;
  }
  const Scalar shift = result.potential.values.at(pointed.base);
  for (auto& [x, f] : result.potential.values) f -= shift;

  Scalar dual;
  for (const auto& [p, m] : mass.entries()) dual += m * result.potential.values.at(p);
  if (dual != result.value) {
    throw InvariantViolation("transport dual value " + dual.to_string() + " != primal " +
                             result.value.to_string());
  }
  return result;
}

NormResult ae_norm(const FormalCombination& u, PointedSpace pointed) {
  for (const auto& t : u.terms) {
    require_in_space(t.x, pointed.space);
    require_in_space(t.y, pointed.space);
  }
  return ae_norm(reduce(u), pointed);
}

FormalCombination embed(PointIndex x, PointedSpace pointed) {
  require_in_space(x, pointed.space);
  if (x == pointed.base) return {};
  return FormalCombination{{Term{Scalar(1), x, pointed.base}}};
}

FormalCombination apply_action(const Word& w, const FormalCombination& u, const SemigroupAction& action) {
  FormalCombination out;
  out.terms.reserve(u.terms.size());
  for (const auto& t : u.terms) {
    if (t.x >= action.domain_size() || t.y >= action.domain_size()) {
      throw StructuralError("combination uses a point outside the action's domain");
    }
    out.terms.push_back({t.c, action.apply(w, t.x), action.apply(w, t.y)});
  }
  return out;
}

ValidationReport verify_dual_certificate(const FormalCombination& u, const NormResult& claimed,
                                         PointedSpace pointed) {
  const auto& space = pointed.space;
  ValidationReport report;
  const SignedMass mass = reduce(u);

  for (const auto& f : claimed.plan.flows) {
    if (f.from >= space.size() || f.to >= space.size()) {
      report.add({"plan-domain", {}, {f.amount}, "flow endpoint outside the space"});
      return report;
    }
    if (f.amount.sign() <= 0) {
      report.add({"plan-amount", {space.name(f.from), space.name(f.to)}, {f.amount}, "flow amount <= 0"});
    }
  }
  const SignedMass div = claimed.plan.divergence();
  std::set<PointIndex> touched;
  for (const auto& [p, m] : mass.entries()) touched.insert(p);
  for (const auto& [p, m] : div.entries()) touched.insert(p);
  for (auto p : touched) {
    if (div.at(p) != mass.at(p)) {
      report.add({"feasibility", {space.name(p)}, {div.at(p), mass.at(p)}, "plan divergence != mass"});
    }
  }
  const Scalar cost = claimed.plan.cost(space);
  if (cost != claimed.value) {
    report.add({"plan-cost", {}, {cost, claimed.value}, "plan cost != claimed norm"});
  }

  const auto& f = claimed.potential.values;
  for (const auto& [p, v] : f) {
    if (p >= space.size()) {
      report.add({"potential-domain", {}, {v}, "potential defined outside the space"});
      return report;
    }
  }
  std::set<PointIndex> needed(touched);
  needed.insert(pointed.base);
  for (auto p : needed) {
    if (!f.count(p)) report.add({"potential-domain", {space.name(p)}, {}, "potential missing at point"});
  }
  for (auto i = f.begin(); i != f.end(); ++i) {
    for (auto j = std::next(i); j != f.end(); ++j) {
      const Scalar gap = abs(i->second - j->second);
      if (gap > space.dist(i->first, j->first)) {
        report.add({"lipschitz", {space.name(i->first), space.name(j->first)},
                    {gap, space.dist(i->first, j->first)}, "|f(p) - f(q)| > d(p,q)"});
      }
    }
  }
  Scalar dual;
  for (const auto& [p, m] : mass.entries()) {
    if (const auto it = f.find(p); it != f.end()) dual += m * it->second;
  }
  if (dual != claimed.value) {
    report.add({"dual-value", {}, {dual, claimed.value}, "sum mass·f != claimed norm"});
  }
  return report;
}

}  // namespace semilin
