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

#include "scx/complex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "scx/error.hpp"

namespace scx {

namespace {

[[noreturn]] void invalid_complex(const std::string& what) {
  throw Error(ErrorCode::InvalidComplex, what);
}

}  // namespace

WeightedComplex::WeightedComplex(int dim, Vertex vertex_count,
                                 std::vector<TopSimplex> tops)
    : dim_(dim), n_(vertex_count), tops_(std::move(tops)) {
  if (dim_ < 1) invalid_complex("dimension must be at least 1");
  if (n_ < 1) invalid_complex("vertex count must be at least 1");
  const auto arity = static_cast<std::size_t>(dim_) + 1;
  for (const TopSimplex& t : tops_) {
    if (t.simplex.size() != arity) {
      invalid_complex("simplex " + t.simplex.to_string() + " does not have " +
                      std::to_string(arity) + " vertices");
    }
    if (t.simplex.max_vertex() > n_) {
      invalid_complex("simplex " + t.simplex.to_string() +
                      " has a vertex above " + std::to_string(n_));
    }
  }
  std::sort(tops_.begin(), tops_.end(),
            [](const TopSimplex& a, const TopSimplex& b) {
              return a.simplex < b.simplex;
            });
  const auto dup = std::adjacent_find(
      tops_.begin(), tops_.end(), [](const TopSimplex& a, const TopSimplex& b) {
        return a.simplex == b.simplex;
      });
  if (dup != tops_.end()) {
    invalid_complex("duplicate simplex " + dup->simplex.to_string());
  }

  // (facet, top, position of the facet within the top)
  std::vector<std::tuple<Simplex, TopId, std::uint32_t>> incidence;
  incidence.reserve(tops_.size() * arity);
  for (TopId t = 0; t < tops_.size(); ++t) {
    for (std::uint32_t k = 0; k < arity; ++k) {
      incidence.emplace_back(tops_[t].simplex.without(k), t, k);
    }
  }
  std::sort(incidence.begin(), incidence.end());

  top_facets_.resize(incidence.size());
  facet_tops_.reserve(incidence.size());
  facet_offsets_.push_back(0);
  for (auto& [facet, top, k] : incidence) {
    if (facets_.empty() || facets_.back() != facet) {
      if (!facets_.empty()) facet_offsets_.push_back(facet_tops_.size());
      facets_.push_back(std::move(facet));
    }
    facet_tops_.push_back(top);
    top_facets_[top * arity + k] = static_cast<FacetId>(facets_.size() - 1);
  }
  if (!facets_.empty()) facet_offsets_.push_back(facet_tops_.size());
}

std::optional<TopId> WeightedComplex::find_top(const Simplex& tau) const {
  const auto it = std::lower_bound(
      tops_.begin(), tops_.end(), tau,
      [](const TopSimplex& t, const Simplex& s) { return t.simplex < s; });
  if (it == tops_.end() || it->simplex != tau) return std::nullopt;
  return static_cast<TopId>(it - tops_.begin());
}

std::optional<double> WeightedComplex::weight(const Simplex& tau) const {
  if (auto id = find_top(tau)) return tops_[*id].weight;
  return std::nullopt;
}

std::optional<FacetId> WeightedComplex::find_facet(const Simplex& sigma) const {
  const auto it = std::lower_bound(facets_.begin(), facets_.end(), sigma);
  if (it == facets_.end() || *it != sigma) return std::nullopt;
  return static_cast<FacetId>(it - facets_.begin());
}

std::span<const TopId> WeightedComplex::incident_tops(FacetId id) const {
  return std::span<const TopId>(facet_tops_)
      .subspan(facet_offsets_[id], facet_offsets_[id + 1] - facet_offsets_[id]);
}

std::span<const FacetId> WeightedComplex::top_facets(TopId id) const {
  const auto arity = static_cast<std::size_t>(dim_) + 1;
  return std::span<const FacetId>(top_facets_).subspan(id * arity, arity);
}

void WeightedComplex::check_facet(const Simplex& sigma) const {
  if (sigma.size() != static_cast<std::size_t>(dim_)) {
    throw Error(ErrorCode::InvalidSimplex,
                "simplex " + sigma.to_string() + " should have " +
                    std::to_string(dim_) + " vertices");
  }
  if (sigma.max_vertex() > n_) {
    throw Error(ErrorCode::InvalidSimplex,
                "simplex " + sigma.to_string() + " has a vertex above " +
                    std::to_string(n_));
  }
}

std::size_t WeightedComplex::degree(const Simplex& sigma) const {
  check_facet(sigma);
  if (auto id = find_facet(sigma)) return incident_tops(*id).size();
  return 0;
}

std::vector<NeighborRecord> WeightedComplex::neighbors(
    const Simplex& sigma) const {
  check_facet(sigma);
  std::vector<NeighborRecord> out;
  const auto id = find_facet(sigma);
  if (!id) return out;
  for (TopId t : incident_tops(*id)) {
    for (FacetId g : top_facets(t)) {
      if (g == *id) continue;
      out.push_back({facets_[g], tops_[t].simplex, tops_[t].weight});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const NeighborRecord& a, const NeighborRecord& b) {
              return a.neighbor < b.neighbor;
            });
  return out;
}

const char* to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::InvalidHeader: return "InvalidHeader";
    case ViolationKind::MalformedSimplex: return "MalformedSimplex";
    case ViolationKind::VertexOutOfRange: return "VertexOutOfRange";
    case ViolationKind::DuplicateSimplex: return "DuplicateSimplex";
    case ViolationKind::NonFiniteWeight: return "NonFiniteWeight";
    case ViolationKind::NegativeWeight: return "NegativeWeight";
    case ViolationKind::NonPositiveWeight: return "NonPositiveWeight";
  }
  return "Unknown";
}

std::size_t ValidationReport::count(ViolationKind kind) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(),
                    [kind](const Violation& v) { return v.kind == kind; }));
}

ValidationReport validate(int dim, Vertex vertex_count,
                          std::span<const RawTop> tops, bool strict_positive) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::size_t index, std::string msg) {
    report.violations.push_back({kind, index, std::move(msg)});
  };
  if (dim < 1) add(ViolationKind::InvalidHeader, 0, "dimension must be at least 1");
  if (vertex_count < 1) {
    add(ViolationKind::InvalidHeader, 0, "vertex count must be at least 1");
  }

  std::map<std::vector<Vertex>, std::size_t> seen;
  for (std::size_t i = 0; i < tops.size(); ++i) {
    const RawTop& t = tops[i];
    std::vector<Vertex> sorted = t.vertices;
    std::sort(sorted.begin(), sorted.end());
    const std::string label = "simplex #" + std::to_string(i + 1);

    bool well_formed = true;
    if (dim >= 1 && sorted.size() != static_cast<std::size_t>(dim) + 1) {
      add(ViolationKind::MalformedSimplex, i,
          label + " has " + std::to_string(sorted.size()) + " vertices, expected " +
              std::to_string(dim + 1));
      well_formed = false;
    } else if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      add(ViolationKind::MalformedSimplex, i, label + " repeats a vertex");
      well_formed = false;
    }
    if (!sorted.empty() && (sorted.front() == 0 || sorted.back() > vertex_count)) {
      add(ViolationKind::VertexOutOfRange, i,
          label + " has a vertex outside 1.." + std::to_string(vertex_count));
      well_formed = false;
    }
    if (well_formed) {
      auto [it, inserted] = seen.emplace(sorted, i);
      if (!inserted) {
        add(ViolationKind::DuplicateSimplex, i,
            label + " duplicates simplex #" + std::to_string(it->second + 1));
      }
    }

    if (!std::isfinite(t.weight)) {
      add(ViolationKind::NonFiniteWeight, i, label + " has a non-finite weight");
    } else if (t.weight < 0) {
      add(ViolationKind::NegativeWeight, i, label + " has a negative weight");
    } else if (strict_positive && t.weight == 0) {
      add(ViolationKind::NonPositiveWeight, i, label + " has weight 0");
    }
  }
  return report;
}

ValidationReport validate(const WeightedComplex& complex,
                          bool strict_positive) {
  std::vector<RawTop> raw;
  raw.reserve(complex.top_count());
  for (const TopSimplex& t : complex.tops()) {
    const auto v = t.simplex.vertices();
    raw.push_back({{v.begin(), v.end()}, t.weight});
  }
  return validate(complex.dim(), complex.vertex_count(), raw, strict_positive);
}

void require_non_negative_weights(const WeightedComplex& complex) {
  for (const TopSimplex& t : complex.tops()) {
    if (!std::isfinite(t.weight) || t.weight < 0) {
      throw Error(ErrorCode::InvalidWeights,
                  "simplex " + t.simplex.to_string() +
                      " has a negative or non-finite weight");
    }
  }
}

}  // namespace scx
