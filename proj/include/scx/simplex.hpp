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

#ifndef SCX_SIMPLEX_HPP
#define SCX_SIMPLEX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scx {

using Vertex = std::uint32_t;

/// A finite set of vertex ids, stored sorted strictly ascending. A simplex
/// with k+1 vertices has dimension k. Vertex ids are 1-based labels; 0 is
/// rejected.
///
/// Construction canonicalizes the input order, so {3,1,2} and {1,2,3} are the
/// same simplex. Ordering is lexicographic on the sorted vertex sequence,
/// which is also the tie-break order used by the shortest-path search.
class Simplex {
 public:
  Simplex() = default;
  Simplex(std::initializer_list<Vertex> vertices);
  explicit Simplex(std::span<const Vertex> vertices);
  explicit Simplex(std::vector<Vertex> vertices);

  /// Builds from a sequence already known to be strictly ascending and
  /// non-zero. Only checked in debug builds.
  static Simplex from_sorted(std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  /// -1 for the empty simplex.
  int dimension() const noexcept {
    return static_cast<int>(vertices_.size()) - 1;
  }
  Vertex operator[](std::size_t i) const noexcept { return vertices_[i]; }
  Vertex max_vertex() const noexcept {
    return vertices_.empty() ? 0 : vertices_.back();
  }

  bool contains(Vertex v) const noexcept;
  bool is_subset_of(const Simplex& other) const noexcept;

  /// The simplex with the i-th vertex removed.
  Simplex without(std::size_t i) const;
  /// Set union.
  Simplex join(const Simplex& other) const;

  /// "1,2,3"
  std::string to_string() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend std::strong_ordering operator<=>(const Simplex& a,
                                          const Simplex& b) noexcept {
    return a.vertices_ <=> b.vertices_;
  }

 private:
  std::vector<Vertex> vertices_;
};

std::ostream& operator<<(std::ostream& os, const Simplex& s);

/// Parses the comma-separated CLI syntax ("3,1" -> {1,3}).
/// Throws Error(InvalidSimplex) on empty tokens, non-numeric ids, 0 or
/// repeated vertices.
Simplex parse_simplex(std::string_view text);

/// The facets of tau: one simplex per deleted vertex, ordered by the
/// deleted vertex ascending. For a d-simplex this is exactly d+1 simplices.
std::vector<Simplex> facets(const Simplex& tau);

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace scx

template <>
struct std::hash<scx::Simplex> : scx::SimplexHash {};

#endif  // SCX_SIMPLEX_HPP
