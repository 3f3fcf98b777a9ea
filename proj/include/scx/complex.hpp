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

// Weighted d-complexes over the vertex universe {1..n} with a complete
// (d-1)-skeleton. Only the weighted top simplices are stored; every d-subset
// of {1..n} is implicitly a (d-1)-simplex, and those not contained in any top
// simplex simply have degree 0.

#ifndef SCX_COMPLEX_HPP
#define SCX_COMPLEX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scx/simplex.hpp"

namespace scx {

using FacetId = std::uint32_t;
using TopId = std::uint32_t;

struct TopSimplex {
  Simplex simplex;
  double weight = 0.0;

  friend bool operator==(const TopSimplex&, const TopSimplex&) = default;
};

/// One element of the neighbor set of a (d-1)-simplex: the neighbor itself,
/// the top simplex joining the two, and that simplex's weight.
struct NeighborRecord {
  Simplex neighbor;
  Simplex via;
  double weight = 0.0;
};

/// Immutable after construction; all const members are safe to call
/// concurrently.
class WeightedComplex {
 public:
  /// Canonicalizes and sorts the top simplices and builds the facet
  /// incidence index. Throws Error(InvalidComplex) if dim < 1, n < 1, a
  /// simplex does not have dim+1 vertices, a vertex exceeds n, or a simplex
  /// appears twice. Weights are stored as given; use validate() to check them.
  WeightedComplex(int dim, Vertex vertex_count, std::vector<TopSimplex> tops);

  int dim() const noexcept { return dim_; }
  Vertex vertex_count() const noexcept { return n_; }

  /// Sorted lexicographically by simplex.
  std::span<const TopSimplex> tops() const noexcept { return tops_; }
  std::size_t top_count() const noexcept { return tops_.size(); }
  std::optional<TopId> find_top(const Simplex& tau) const;
  std::optional<double> weight(const Simplex& tau) const;

  // Facet index: the (d-1)-simplices incident to at least one top simplex,
  // numbered in lexicographic order. Non-incident facets have no id.
  std::size_t facet_count() const noexcept { return facets_.size(); }
  const Simplex& facet(FacetId id) const { return facets_[id]; }
  std::optional<FacetId> find_facet(const Simplex& sigma) const;
  /// Top simplices containing the facet, ascending.
  std::span<const TopId> incident_tops(FacetId id) const;
  /// Facets of the top simplex in facets() order (deleted vertex ascending).
  std::span<const FacetId> top_facets(TopId id) const;

  /// Throws Error(InvalidSimplex) unless sigma has dim() vertices in 1..n.
  void check_facet(const Simplex& sigma) const;

  std::size_t degree(const Simplex& sigma) const;
  /// Sorted by neighbor. Always d * degree(sigma) records.
  std::vector<NeighborRecord> neighbors(const Simplex& sigma) const;

  /// Weights are compared bitwise-equal (NaN never equal).
  friend bool operator==(const WeightedComplex& a, const WeightedComplex& b) {
    return a.dim_ == b.dim_ && a.n_ == b.n_ && a.tops_ == b.tops_;
  }

 private:
  int dim_;
  Vertex n_;
  std::vector<TopSimplex> tops_;
  std::vector<Simplex> facets_;
  // CSR incidence in both directions.
  std::vector<std::uint32_t> facet_offsets_;
  std::vector<TopId> facet_tops_;
  std::vector<FacetId> top_facets_;
};

enum class ViolationKind {
  InvalidHeader,
  MalformedSimplex,
  VertexOutOfRange,
  DuplicateSimplex,
  NonFiniteWeight,
  NegativeWeight,
  NonPositiveWeight,
};

const char* to_string(ViolationKind kind) noexcept;

struct Violation {
  ViolationKind kind;
  std::size_t index;  // position in the input sequence
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::size_t count(ViolationKind kind) const noexcept;
};

/// Uncanonicalized input as read from a file or an API caller.
struct RawTop {
  std::vector<Vertex> vertices;
  double weight = 0.0;
};

/// Reports every problem in the input instead of stopping at the first.
/// Zero weights are accepted unless strict_positive is set; negative and
/// non-finite weights are always violations.
ValidationReport validate(int dim, Vertex vertex_count,
                          std::span<const RawTop> tops, bool strict_positive);
ValidationReport validate(const WeightedComplex& complex,
                          bool strict_positive);

/// Throws Error(InvalidWeights) if any weight is negative or non-finite.
void require_non_negative_weights(const WeightedComplex& complex);

}  // namespace scx

#endif  // SCX_COMPLEX_HPP
