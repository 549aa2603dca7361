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

#ifndef SEMILIN_TRANSPORT_HPP
#define SEMILIN_TRANSPORT_HPP

#include "semilin/scalar.hpp"

#include <cstddef>
#include <vector>

namespace semilin {

/// Balanced transportation problem on the complete bipartite graph:
///
///   min  sum_ij cost[i][j] * flow[i][j]
///   s.t. sum_j flow[i][j] = supply[i],  sum_i flow[i][j] = demand[j],  flow >= 0
///
/// Supplies and demands must be positive and balance exactly (within
/// tolerance for approximate scalars). Costs are row-major.
struct TransportProblem {
  std::vector<Scalar> supply;
  std::vector<Scalar> demand;
  std::vector<Scalar> cost;
};

/// Optimal basic solution with the dual read off the final basis:
/// row_potential[i] + col_potential[j] <= cost[i][j] everywhere, with
/// equality on basic cells.
struct TransportSolution {
  std::vector<Scalar> flow;
  std::vector<Scalar> row_potential;
  std::vector<Scalar> col_potential;
  Scalar cost;
  std::size_t pivots = 0;
};

/// Transportation simplex (the network simplex specialised to bipartite
/// graphs). Northwest-corner start, Bland's rule for the entering and
/// leaving cells so degenerate pivots cannot cycle. All arithmetic is done
/// in Scalar, hence exact for rational input.
///
/// Throws PreconditionError for empty sides, non-positive masses, unbalanced
/// totals or a wrongly sized cost table.
TransportSolution solve_transport(const TransportProblem& problem);

}  // namespace semilin

#endif  // SEMILIN_TRANSPORT_HPP
