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

#include "scx/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "scx/error.hpp"

namespace scx::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_weights(const WeightedComplex& x) {
  for (const TopSimplex& t : x.tops()) {
    if (!(t.weight >= 0) || !std::isfinite(t.weight)) {
      throw Error(ErrorCode::InvalidWeights, "oracle needs non-negative weights");
    }
  }
}

void require_facet(const WeightedComplex& x, const Simplex& s) {
  if (s.size() != static_cast<std::size_t>(x.dim()) || s.max_vertex() > x.vertex_count()) {
    throw Error(ErrorCode::InvalidSimplex, "not a (d-1)-simplex: " + s.to_string());
  }
}

struct Move {
  Simplex next;
  std::size_t top;
  double weight;
};

class PathSearch {
 public:
  PathSearch(const WeightedComplex& x, const Simplex& target, std::uint64_t budget)
      : x_(x),
        target_(target),
        budget_(budget),
        used_tops_(x.top_count(), false),
        walk_bound_(dual_graph_distances(x, target)) {}

  double run(const Simplex& source) {
    visited_.insert(source);
    extend(source, 0.0);
    return best_;
  }

 private:
  // Lower bound on the remaining cost: the cheapest unconstrained walk to the
  // target. Every d-path is such a walk, so the bound never prunes a d-path
  // that could beat the incumbent.
  // The bound is shaved slightly so that rounding in the walk sums cannot
  // cut off an optimal d-path with non-integer weights.
  double remaining_bound(const Simplex& s) const {
    const auto it = walk_bound_.find(s);
    return it == walk_bound_.end() ? kInf : it->second * (1.0 - 1e-9);
  }

  void extend(const Simplex& current, double cost) {
    if (++expansions_ > budget_) {
      throw Error(ErrorCode::InstanceTooLarge,
                  "brute-force search exceeded " + std::to_string(budget_) + " expansions");
    }
    if (current == target_) {
      best_ = std::min(best_, cost);
      return;
    }
    if (cost + remaining_bound(current) >= best_) return;

    std::vector<Move> moves;
    const auto tops = x_.tops();
    for (std::size_t i = 0; i < tops.size(); ++i) {
      if (used_tops_[i] || !current.is_subset_of(tops[i].simplex)) continue;
      for (const Simplex& f : facets(tops[i].simplex)) {
        if (f != current && !visited_.contains(f)) moves.push_back({f, i, tops[i].weight});
      }
    }
    // Most promising first, so an incumbent is found on the first descent.
    std::stable_sort(moves.begin(), moves.end(), [this](const Move& a, const Move& b) {
      return a.weight + remaining_bound(a.next) < b.weight + remaining_bound(b.next);
    });

    for (const Move& m : moves) {
      if (cost + m.weight + remaining_bound(m.next) >= best_) continue;
      used_tops_[m.top] = true;
      visited_.insert(m.next);
      extend(m.next, cost + m.weight);
      visited_.erase(m.next);
      used_tops_[m.top] = false;
    }
  }

  const WeightedComplex& x_;
  const Simplex& target_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  double best_ = kInf;
  std::vector<bool> used_tops_;
  std::map<Simplex, double> walk_bound_;
  std::set<Simplex> visited_;
};

}  // namespace

double brute_force_distance(const WeightedComplex& complex, const Simplex& source,
                            const Simplex& target, std::uint64_t budget) {
  require_facet(complex, source);
  require_facet(complex, target);
  require_weights(complex);
  if (source == target) return 0.0;
  return PathSearch(complex, target, budget).run(source);
}

std::vector<double> graph_dijkstra(Vertex count, const std::vector<Edge>& edges,
                                   Vertex source) {
  if (source < 1 || source > count) {
    throw Error(ErrorCode::InvalidSimplex, "source vertex out of range");
  }
  std::vector<std::vector<std::pair<Vertex, double>>> adj(count + 1);
  for (const Edge& e : edges) {
    if (!(e.weight >= 0)) throw Error(ErrorCode::InvalidWeights, "negative edge weight");
    adj[e.u].emplace_back(e.v, e.weight);
    adj[e.v].emplace_back(e.u, e.weight);
  }

  std::vector<double> dist(count + 1, kInf);
  std::vector<bool> done(count + 1, false);
  dist[source] = 0.0;
  for (Vertex round = 0; round < count; ++round) {
    Vertex u = 0;
    for (Vertex v = 1; v <= count; ++v) {
      if (!done[v] && dist[v] < kInf && (u == 0 || dist[v] < dist[u])) u = v;
    }
    if (u == 0) break;
    done[u] = true;
    for (const auto& [v, w] : adj[u]) dist[v] = std::min(dist[v], dist[u] + w);
  }
  return dist;
}

std::map<Simplex, double> dual_graph_distances(const WeightedComplex& complex,
                                               const Simplex& source) {
  require_facet(complex, source);
  std::map<Simplex, Vertex> ids{{source, 1}};
  std::vector<Simplex> names{Simplex{}, source};
  auto id_of = [&](const Simplex& s) {
    auto [it, inserted] = ids.emplace(s, static_cast<Vertex>(names.size()));
    if (inserted) names.push_back(s);
    return it->second;
  };

  std::vector<Edge> edges;
  for (const TopSimplex& t : complex.tops()) {
    const auto fs = facets(t.simplex);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = i + 1; j < fs.size(); ++j) {
        edges.push_back({id_of(fs[i]), id_of(fs[j]), t.weight});
      }
    }
  }
  const auto dist =
      graph_dijkstra(static_cast<Vertex>(names.size() - 1), edges, 1);
  std::map<Simplex, double> out;
  for (Vertex v = 1; v < names.size(); ++v) {
    if (dist[v] < kInf) out.emplace(names[v], dist[v]);
  }
  return out;
}

}  // namespace scx::oracle
