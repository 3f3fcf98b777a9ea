/* Copyright 2026 The scx Authors
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

// Reference implementations for verification only. They follow the
// definitions directly and make no use of the search in shortest_path.hpp.
// Not part of the shared library.

#ifndef SCX_ORACLE_HPP
#define SCX_ORACLE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "scx/complex.hpp"

namespace scx::oracle {

inline constexpr std::uint64_t kDefaultExpansionBudget = 10'000'000;

struct Edge {
  Vertex u;
  Vertex v;
  double weight;
};

/// Minimum total weight over every sequence satisfying the d-path
/// definition, found by exhaustive depth-first enumeration. Branches are cut
/// only when their cost plus the cheapest unconstrained dual-graph walk to
/// the target cannot beat the best d-path found so far; since every d-path
/// is such a walk, no candidate is ever lost. Infinity when no d-path exists. Throws
/// Error(InstanceTooLarge) once more than `budget` partial paths have been
/// expanded, and Error(InvalidWeights) on negative weights.
double brute_force_distance(const WeightedComplex& complex, const Simplex& source,
                            const Simplex& target,
                            std::uint64_t budget = kDefaultExpansionBudget);

/// Textbook O(V^2) Dijkstra on an undirected graph with vertices 1..count.
/// Result is indexed by vertex id; slot 0 is unused. Throws
/// Error(InvalidWeights) on negative weights.
std::vector<double> graph_dijkstra(Vertex count, const std::vector<Edge>& edges,
                                   Vertex source);

/// Unconstrained walk distances on the dual graph: every pair of facets of
/// each top simplex is joined by an edge carrying the simplex's weight.
/// Only reachable simplices appear.
std::map<Simplex, double> dual_graph_distances(const WeightedComplex& complex,
                                               const Simplex& source);

}  // namespace scx::oracle

#endif  // SCX_ORACLE_HPP
