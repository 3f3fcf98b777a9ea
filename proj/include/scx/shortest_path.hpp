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

// Single-source shortest d-paths between (d-1)-simplices of a weighted
// d-complex. Two (d-1)-simplices are adjacent when their union is a top
// simplex, and stepping across costs that simplex's weight.
//
// The search is Dijkstra over this implicit dual graph, with a binary heap
// and lazy deletion. All ties are broken by the lexicographic order of the
// simplices, so results are reproducible bit for bit.

#ifndef SCX_SHORTEST_PATH_HPP
#define SCX_SHORTEST_PATH_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "scx/complex.hpp"
#include "scx/simplex.hpp"

namespace scx {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Predecessor {
  Simplex simplex;  // previous (d-1)-simplex on the path
  Simplex via;      // top simplex joining it to this one
};

/// Final distances from one source. Only reachable simplices are stored;
/// anything absent is at infinite distance.
class DistanceMap {
 public:
  struct Entry {
    Simplex simplex;
    double distance;
    std::optional<Predecessor> predecessor;  // empty for the source
  };

  DistanceMap(Simplex source, std::vector<Entry> entries);

  const Simplex& source() const noexcept { return source_; }
  double distance(const Simplex& sigma) const;
  bool reachable(const Simplex& sigma) const { return index_.contains(sigma); }
  const Predecessor* predecessor(const Simplex& sigma) const;

  /// In the order the search finalized them; the source comes first.
  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  Simplex source_;
  std::vector<Entry> entries_;
  std::unordered_map<Simplex, std::size_t> index_;
};

/// simplices[0..l], joined by via[0..l-1].
struct DPath {
  std::vector<Simplex> simplices;
  std::vector<Simplex> via;
  double total = 0.0;

  std::size_t length() const noexcept { return via.size(); }
};

/// Throws Error(InvalidWeights) for negative or non-finite weights and
/// Error(InvalidSimplex) for a malformed source.
DistanceMap sssp(const WeightedComplex& complex, const Simplex& source);

/// Stops as soon as the target is finalized. Returns nullopt when the target
/// is unreachable.
std::optional<DPath> shortest_path(const WeightedComplex& complex,
                                   const Simplex& source,
                                   const Simplex& target);

/// Walks predecessors back from target. Requires target to be reachable.
DPath reconstruct_path(const DistanceMap& distances, const Simplex& target);

struct PathCheck {
  bool valid = false;
  std::string diagnostic;  // first violated clause; empty when valid

  explicit operator bool() const noexcept { return valid; }
};

/// Checks the d-path definition: every element is a (d-1)-simplex of the
/// complex, the elements are pairwise distinct, each consecutive union is a
/// top simplex, and those top simplices are pairwise distinct.
PathCheck is_d_path(const WeightedComplex& complex,
                    std::span<const Simplex> simplices);

}  // namespace scx

#endif  // SCX_SHORTEST_PATH_HPP
