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

#include "semilin/transport.hpp"

#include "semilin/errors.hpp"

#include <deque>
#include <optional>

namespace semilin {

namespace {

class TransportSimplex {
 public:
  explicit TransportSimplex(const TransportProblem& p)
      : p_(p), m_(p.supply.size()), n_(p.demand.size()), flow_(m_ * n_), basic_(m_ * n_, false) {}

  TransportSolution run() {
    northwest_corner();
    TransportSolution out;
    // Bland's rule terminates; the cap only turns a defect into an exception.
    const std::size_t cap = 1000 * (m_ * n_ + 10);
    for (;;) {
      compute_potentials();
      const auto entering = find_entering();
      if (!entering) break;
      pivot(*entering);
      if (++out.pivots > cap) throw InvariantViolation("transport simplex exceeded pivot cap");
    }
    out.flow = flow_;
    out.row_potential = u_;
    out.col_potential = v_;
    for (std::size_t c = 0; c < m_ * n_; ++c) {
      if (basic_[c]) out.cost += p_.cost[c] * flow_[c];
    }
    return out;
  }

 private:
  void northwest_corner() {
    std::size_t i = 0;
    std::size_t j = 0;
    Scalar row_left = p_.supply[0];
    Scalar col_left = p_.demand[0];
    for (;;) {
      const Scalar amount = min(row_left, col_left);
      const std::size_t c = i * n_ + j;
      basic_[c] = true;
      flow_[c] = amount;
      row_left -= amount;
      col_left -= amount;
      if (i + 1 == m_ && j + 1 == n_) break;
      // Advance exactly one index per cell so the basis is a spanning tree
      // with m + n - 1 cells (degenerate zeros included).
      if (j + 1 == n_ || (i + 1 < m_ && row_left.is_zero())) {
        ++i;
        row_left = p_.supply[i];
      } else {
        ++j;
        col_left = p_.demand[j];
      }
    }
  }

  // Tree nodes: rows 0..m-1, columns m..m+n-1.
  std::vector<std::vector<std::size_t>> adjacency() const {
    std::vector<std::vector<std::size_t>> adj(m_ + n_);
    for (std::size_t c = 0; c < m_ * n_; ++c) {
      if (!basic_[c]) continue;
      adj[c / n_].push_back(c);
      adj[m_ + c % n_].push_back(c);
    }
    return adj;
  }

  std::size_t other_end(std::size_t node, std::size_t cell) const {
    return node < m_ ? m_ + cell % n_ : cell / n_;
  }

  void compute_potentials() {
    const auto adj = adjacency();
    u_.assign(m_, Scalar());
    v_.assign(n_, Scalar());
    std::vector<bool> done(m_ + n_, false);
    std::deque<std::size_t> queue{0};
    done[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
      const std::size_t node = queue.front();
      queue.pop_front();
      for (auto c : adj[node]) {
        const std::size_t next = other_end(node, c);
        if (done[next]) continue;
        done[next] = true;
        ++reached;
        // u_i + v_j = cost_ij on basic cells.
        if (next < m_) {
          u_[next] = p_.cost[c] - v_[c % n_];
        } else {
          v_[next - m_] = p_.cost[c] - u_[c / n_];
        }
        queue.push_back(next);
      }
    }
    if (reached != m_ + n_) throw InvariantViolation("transport basis is not a spanning tree");
  }

  std::optional<std::size_t> find_entering() const {
    for (std::size_t c = 0; c < m_ * n_; ++c) {
      if (basic_[c]) continue;
      if (p_.cost[c] - u_[c / n_] - v_[c % n_] < Scalar()) return c;
    }
    return std::nullopt;
  }

  void pivot(std::size_t entering) {
    const auto adj = adjacency();
    const std::size_t from = entering / n_;
    const std::size_t to = m_ + entering % n_;
    // Tree path from row `from` to column `to`.
    std::vector<std::optional<std::size_t>> via(m_ + n_);
    std::vector<bool> seen(m_ + n_, false);
    std::deque<std::size_t> queue{from};
    seen[from] = true;
    while (!queue.empty() && !seen[to]) {
      const std::size_t node = queue.front();
      queue.pop_front();
      for (auto c : adj[node]) {
        const std::size_t next = other_end(node, c);
        if (seen[next]) continue;
        seen[next] = true;
        via[next] = c;
        queue.push_back(next);
      }
    }
    std::vector<std::size_t> path;
    for (std::size_t node = to; node != from;) {
      const std::size_t c = *via[node];
      path.push_back(c);
      node = other_end(node, c);
    }
    // `path` runs from the column end back to `from`; cells adjacent to the
    // entering cell's endpoints lose flow, alternating along the cycle.
    std::optional<std::size_t> leaving;
    for (std::size_t k = 0; k < path.size(); k += 2) {
      const std::size_t c = path[k];
      if (!leaving || flow_[c] < flow_[*leaving] || (flow_[c] == flow_[*leaving] && c < *leaving)) {
        leaving = c;
      }
    }
    const Scalar theta = flow_[*leaving];
    for (std::size_t k = 0; k < path.size(); ++k) {
      if (k % 2 == 0) {
        flow_[path[k]] -= theta;
      } else {
        flow_[path[k]] += theta;
      }
    }
    basic_[entering] = true;
    flow_[entering] = theta;
    basic_[*leaving] = false;
    flow_[*leaving] = Scalar();
  }

  const TransportProblem& p_;
  std::size_t m_;
  std::size_t n_;
  std::vector<Scalar> flow_;
  std::vector<bool> basic_;
  std::vector<Scalar> u_;
  std::vector<Scalar> v_;
};

}  // namespace

TransportSolution solve_transport(const TransportProblem& problem) {
  const std::size_t m = problem.supply.size();
  const std::size_t n = problem.demand.size();
  if (m == 0 || n == 0) throw PreconditionError("transport problem with an empty side");
  if (problem.cost.size() != m * n) throw PreconditionError("transport cost table has the wrong size");
  Scalar total_supply;
  Scalar total_demand;
  for (const auto& s : problem.supply) {
    if (s.sign() <= 0) throw PreconditionError("supplies must be positive");
    total_supply += s;
  }
  for (const auto& d : problem.demand) {
    if (d.sign() <= 0) throw PreconditionError("demands must be positive");
    total_demand += d;
  }
  if (total_supply != total_demand) throw PreconditionError("transport problem is not balanced");
  return TransportSimplex(problem).run();
}

}  // namespace semilin
