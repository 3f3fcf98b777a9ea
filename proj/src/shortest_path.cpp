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

#include "scx/shortest_path.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <utility>

#include "scx/error.hpp"

namespace scx {

DistanceMap::DistanceMap(Simplex source, std::vector<Entry> entries)
    : source_(std::move(source)), entries_(std::move(entries)) {
  index_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    index_.emplace(entries_[i].simplex, i);
  }
}

double DistanceMap::distance(const Simplex& sigma) const {
  const auto it = index_.find(sigma);
  return it == index_.end() ? kInfinity : entries_[it->second].distance;
}

const Predecessor* DistanceMap::predecessor(const Simplex& sigma) const {
  const auto it = index_.find(sigma);
  if (it == index_.end()) return nullptr;
  const auto& pred = entries_[it->second].predecessor;
  return pred ? &*pred : nullptr;
}

namespace {

constexpr FacetId kNoFacet = static_cast<FacetId>(-1);

struct SearchState {
  std::vector<double> dist;
  std::vector<FacetId> pred;
  std::vector<TopId> via;
  std::vector<FacetId> order;  // extraction order
};

// Dijkstra over facet ids. Facet ids follow lexicographic order, so the
// (distance, id) heap key gives the lexicographic tie-break directly.
SearchState search(const WeightedComplex& x, FacetId source, FacetId stop) {
  const std::size_t count = x.facet_count();
  SearchState s;
  s.dist.assign(count, kInfinity);
  s.pred.assign(count, kNoFacet);
  s.via.assign(count, 0);
  std::vector<bool> visited(count, false);

  using Item = std::pair<double, FacetId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  s.dist[source] = 0.0;
  heap.emplace(0.0, source);

  while (!heap.empty()) {
    const auto [d, current] = heap.top();
    heap.pop();
    if (visited[current]) continue;  // stale entry
    visited[current] = true;
    s.order.push_back(current);
    if (current == stop) break;

    for (TopId t : x.incident_tops(current)) {
      const double candidate = d + x.tops()[t].weight;
      for (FacetId next : x.top_facets(t)) {
        if (visited[next]) continue;
        // Strict: an equal-cost route keeps the earlier predecessor.
        if (candidate < s.dist[next]) {
          s.dist[next] = candidate;
          s.pred[next] = current;
          s.via[next] = t;
          heap.emplace(candidate, next);
        }
      }
    }
  }
  return s;
}

DistanceMap::Entry make_entry(const WeightedComplex& x, const SearchState& s,
                              FacetId id) {
  DistanceMap::Entry e{x.facet(id), s.dist[id], std::nullopt};
  if (s.pred[id] != kNoFacet) {
    e.predecessor = Predecessor{x.facet(s.pred[id]), x.tops()[s.via[id]].simplex};
  }
  return e;
}

void check_query(const WeightedComplex& x, const Simplex& sigma) {
  if (sigma.empty()) throw Error(ErrorCode::InvalidSimplex, "empty simplex");
  x.check_facet(sigma);
}

}  // namespace

DistanceMap sssp(const WeightedComplex& complex, const Simplex& source) {
  check_query(complex, source);
  require_non_negative_weights(complex);

  const auto id = complex.find_facet(source);
  if (!id) return DistanceMap(source, {{source, 0.0, std::nullopt}});

  const SearchState s = search(complex, *id, kNoFacet);
  std::vector<DistanceMap::Entry> entries;
  entries.reserve(s.order.size());
  for (FacetId f : s.order) entries.push_back(make_entry(complex, s, f));
  return DistanceMap(source, std::move(entries));
}

std::optional<DPath> shortest_path(const WeightedComplex& complex,
                                   const Simplex& source,
                                   const Simplex& target) {
  check_query(complex, source);
  check_query(complex, target);
  require_non_negative_weights(complex);

  if (source == target) return DPath{{source}, {}, 0.0};
  const auto from = complex.find_facet(source);
  const auto to = complex.find_facet(target);
  if (!from || !to) return std::nullopt;

  const SearchState s = search(complex, *from, *to);
  if (s.order.empty() || s.order.back() != *to) return std::nullopt;

  DPath path;
  path.total = s.dist[*to];
  for (FacetId f = *to; f != *from; f = s.pred[f]) {
    path.simplices.push_back(complex.facet(f));
    path.via.push_back(complex.tops()[s.via[f]].simplex);
  }
  path.simplices.push_back(source);
  std::reverse(path.simplices.begin(), path.simplices.end());
  std::reverse(path.via.begin(), path.via.end());
  return path;
}

DPath reconstruct_path(const DistanceMap& distances, const Simplex& target) {
  if (!distances.reachable(target)) {
    throw Error(ErrorCode::InvalidSimplex,
                "simplex " + target.to_string() + " is not reachable");
  }
  DPath path;
  path.total = distances.distance(target);
  const Simplex* current = &target;
  while (const Predecessor* p = distances.predecessor(*current)) {
    path.simplices.push_back(*current);
    path.via.push_back(p->via);
    current = &p->simplex;
  }
  path.simplices.push_back(*current);
  std::reverse(path.simplices.begin(), path.simplices.end());
  std::reverse(path.via.begin(), path.via.end());
  return path;
}

PathCheck is_d_path(const WeightedComplex& complex,
                    std::span<const Simplex> simplices) {
  auto fail = [](std::string why) { return PathCheck{false, std::move(why)}; };
  if (simplices.empty()) return fail("empty sequence");

  const auto dim = static_cast<std::size_t>(complex.dim());
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const Simplex& s = simplices[i];
    if (s.size() != dim || s.max_vertex() > complex.vertex_count()) {
      return fail("element " + std::to_string(i) + " " + s.to_string() +
                  " is not a (d-1)-simplex of the complex");
    }
  }

  std::set<Simplex> seen;
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    if (!seen.insert(simplices[i]).second) {
      return fail("(d-1)-simplex " + simplices[i].to_string() + " repeated at position " +
                  std::to_string(i));
    }
  }

  std::set<Simplex> used;
  for (std::size_t i = 0; i + 1 < simplices.size(); ++i) {
    const Simplex tau = simplices[i].join(simplices[i + 1]);
    if (tau.size() != dim + 1 || !complex.find_top(tau)) {
      return fail("union of positions " + std::to_string(i) + " and " +
                  std::to_string(i + 1) + " (" + tau.to_string() +
                  ") is not a top simplex");
    }
    if (!used.insert(tau).second) {
      return fail("top simplex " + tau.to_string() + " reused at step " +
                  std::to_string(i));
    }
  }
  return PathCheck{true, {}};
}

}  // namespace scx
