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

#include <doctest.h>

#include <cmath>
#include <future>
#include <map>
#include <vector>

#include "scx/error.hpp"
#include "scx/generator.hpp"
#include "scx/oracle.hpp"
#include "scx/shortest_path.hpp"
#include "support/support.hpp"

using scx::DistanceMap;
using scx::Simplex;
using scx::WeightedComplex;
using scx::testing::fixture;

namespace {

WeightedComplex graph(scx::Vertex n,
                      std::initializer_list<std::tuple<scx::Vertex, scx::Vertex, double>> edges) {
  std::vector<scx::TopSimplex> tops;
  for (const auto& [u, v, w] : edges) tops.push_back({Simplex{u, v}, w});
  return WeightedComplex(1, n, std::move(tops));
}

WeightedComplex random_complex(std::uint64_t seed, bool integer) {
  scx::GeneratorConfig cfg;
  cfg.d = static_cast<int>(seed % 3) + 1;
  cfg.n = static_cast<scx::Vertex>(cfg.d + 2 + seed % 5);
  cfg.p = 0.2 + 0.15 * static_cast<double>(seed % 5);
  cfg.weight_low = integer ? 1 : 0.25;
  cfg.weight_high = integer ? 10 : 7.5;
  cfg.integer_weights = integer;
  cfg.seed = 1000 + seed;
  return scx::generate(cfg);
}

bool near(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a));
}

}  // namespace

TEST_CASE("weighted trace from {1,3}") {
  const WeightedComplex x = fixture("chain.scx");
  const DistanceMap t = scx::sssp(x, Simplex{1, 3});
  CHECK(t.distance(Simplex{1, 3}) == 0);
  CHECK(t.distance(Simplex{1, 2}) == 2);
  CHECK(t.distance(Simplex{2, 3}) == 2);
  CHECK(t.distance(Simplex{2, 5}) == 5);
  CHECK(t.distance(Simplex{3, 5}) == 5);
  CHECK(t.distance(Simplex{3, 4}) == 10);
  CHECK(t.distance(Simplex{4, 5}) == 10);
  CHECK(t.distance(Simplex{2, 6}) == 12);
  CHECK(t.distance(Simplex{5, 6}) == 12);
  // The listed weight of {4,5,7} is 5, so the far edges cost 2+3+5+5.
  CHECK(t.distance(Simplex{4, 7}) == 15);
  CHECK(t.distance(Simplex{5, 7}) == 15);
  CHECK(t.size() == 11);
  CHECK(std::isinf(t.distance(Simplex{1, 7})));
  CHECK_FALSE(t.reachable(Simplex{6, 7}));
  CHECK(t.predecessor(Simplex{1, 3}) == nullptr);

  const auto* p = t.predecessor(Simplex{4, 7});
  REQUIRE(p);
  CHECK(p->simplex == Simplex{4, 5});
  CHECK(p->via == Simplex{4, 5, 7});
}

TEST_CASE("shortest path from {1,3} to {4,7}") {
  const WeightedComplex x = fixture("chain.scx");
  const auto path = scx::shortest_path(x, Simplex{1, 3}, Simplex{4, 7});
  REQUIRE(path);
  using V = std::vector<Simplex>;
  CHECK(path->simplices == V{{1, 3}, {2, 3}, {3, 5}, {4, 5}, {4, 7}});
  CHECK(path->via == V{{1, 2, 3}, {2, 3, 5}, {3, 4, 5}, {4, 5, 7}});
  CHECK(path->total == 15);
  CHECK(path->length() == 4);
  CHECK(scx::is_d_path(x, path->simplices));

  const auto via_map = scx::reconstruct_path(scx::sssp(x, Simplex{1, 3}), Simplex{4, 7});
  CHECK(via_map.simplices == path->simplices);
  CHECK(via_map.via == path->via);
  CHECK(via_map.total == path->total);
}

TEST_CASE("trivial and unreachable queries") {
  const WeightedComplex x = fixture("chain.scx");
  const auto self = scx::shortest_path(x, Simplex{2, 5}, Simplex{2, 5});
  REQUIRE(self);
  CHECK(self->length() == 0);
  CHECK(self->total == 0);
  CHECK(self->simplices == std::vector<Simplex>{{2, 5}});

  const WeightedComplex shared = fixture("shared_edge.scx");
  CHECK_FALSE(scx::shortest_path(shared, Simplex{1, 2}, Simplex{2, 3}));

  const WeightedComplex empty(2, 5, {});
  const DistanceMap t = scx::sssp(empty, Simplex{1, 2});
  CHECK(t.size() == 1);
  CHECK(t.distance(Simplex{1, 2}) == 0);
  CHECK(std::isinf(t.distance(Simplex{3, 4})));

  // Isolated source in a non-empty complex.
  const DistanceMap iso = scx::sssp(shared, Simplex{2, 3});
  CHECK(iso.size() == 1);
  CHECK_THROWS_AS(scx::reconstruct_path(iso, Simplex{1, 2}), scx::Error);
}

TEST_CASE("errors") {
  const WeightedComplex x = fixture("chain.scx");
  CHECK_THROWS_AS(scx::sssp(x, Simplex{1, 2, 3}), scx::Error);
  CHECK_THROWS_AS(scx::sssp(x, Simplex{1, 8}), scx::Error);
  CHECK_THROWS_AS(scx::shortest_path(x, Simplex{1, 3}, Simplex{4}), scx::Error);

  const WeightedComplex negative = graph(3, {{1, 2, 1.0}, {2, 3, -1.0}});
  try {
    scx::sssp(negative, Simplex{1});
    FAIL("expected InvalidWeights");
  } catch (const scx::Error& e) {
    CHECK(e.code() == scx::ErrorCode::InvalidWeights);
  }
  const WeightedComplex nan = graph(2, {{1, 2, std::nan("")}});
  CHECK_THROWS_AS(scx::shortest_path(nan, Simplex{1}, Simplex{2}), scx::Error);
}

TEST_CASE("equal-cost relaxation keeps the first predecessor") {
  // Square 1-2-4-3-1 with unit weights: {4} is reached through {2} first
  // ({2} < {3} in extraction), and the tie through {3} does not replace it.
  const WeightedComplex x = graph(4, {{1, 2, 1}, {1, 3, 1}, {2, 4, 1}, {3, 4, 1}});
  const DistanceMap t = scx::sssp(x, Simplex{1});
  CHECK(t.distance(Simplex{4}) == 2);
  const auto* p = t.predecessor(Simplex{4});
  REQUIRE(p);
  CHECK(p->simplex == Simplex{2});
  CHECK(p->via == Simplex{2, 4});
  REQUIRE(t.size() == 4);
  CHECK(t.entries()[1].simplex == Simplex{2});
  CHECK(t.entries()[2].simplex == Simplex{3});
}

TEST_CASE("zero weights are allowed") {
  const WeightedComplex x = graph(3, {{1, 2, 0}, {2, 3, 0}, {1, 3, 5}});
  const DistanceMap t = scx::sssp(x, Simplex{1});
  CHECK(t.distance(Simplex{3}) == 0);
  const auto path = scx::shortest_path(x, Simplex{1}, Simplex{3});
  REQUIRE(path);
  CHECK(path->length() == 2);
  CHECK(scx::is_d_path(x, path->simplices));
}

TEST_CASE("is_d_path") {
  const WeightedComplex strip = fixture("path_strip.scx");
  const std::vector<Simplex> p{{1, 2}, {2, 6}, {5, 6}, {5, 10}, {10, 11}, {11, 13}};
  const auto ok = scx::is_d_path(strip, p);
  CHECK(ok.valid);
  CHECK(ok.diagnostic.empty());

  const WeightedComplex one(2, 3, {{Simplex{1, 2, 3}, 1.0}});
  const std::vector<Simplex> reuse{{1, 2}, {2, 3}, {1, 3}};
  const auto r = scx::is_d_path(one, reuse);
  CHECK_FALSE(r);
  CHECK(r.diagnostic.find("reused") != std::string::npos);

  const std::vector<Simplex> repeat{{1, 2}, {2, 6}, {1, 2}};
  const auto rep = scx::is_d_path(strip, repeat);
  CHECK_FALSE(rep);
  CHECK(rep.diagnostic.find("repeated") != std::string::npos);

  const std::vector<Simplex> gap{{1, 2}, {5, 6}};
  const auto g = scx::is_d_path(strip, gap);
  CHECK_FALSE(g);
  CHECK(g.diagnostic.find("not a top simplex") != std::string::npos);

  CHECK_FALSE(scx::is_d_path(strip, std::vector<Simplex>{}));
  CHECK_FALSE(scx::is_d_path(strip, std::vector<Simplex>{{1, 2, 3}}));
  CHECK(scx::is_d_path(strip, std::vector<Simplex>{{1, 2}}));
}

TEST_CASE("property: agrees with the brute-force oracle") {
  for (std::uint64_t i = 0; i < 90; ++i) {
    const WeightedComplex x = scx::generate(scx::testing::small_config(i));
    CAPTURE(i);
    const auto all = scx::testing::all_facets(x);
    for (const Simplex& s : all) {
      const DistanceMap t = scx::sssp(x, s);
      for (const Simplex& u : all) {
        CHECK(t.distance(u) == scx::oracle::brute_force_distance(x, s, u));
      }
    }
  }
}

TEST_CASE("property: agrees with unconstrained walks on the dual graph") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const bool integer = seed % 2 == 0;
    const WeightedComplex x = random_complex(seed, integer);
    CAPTURE(seed);
    for (const Simplex& s : scx::testing::incident_facets(x)) {
      const DistanceMap t = scx::sssp(x, s);
      const auto walks = scx::oracle::dual_graph_distances(x, s);
      CHECK(walks.size() == t.size());
      for (const auto& [sigma, d] : walks) {
        if (integer) {
          CHECK(t.distance(sigma) == d);
        } else {
          CHECK(near(t.distance(sigma), d));
        }
      }
    }
  }
}

TEST_CASE("property: metric axioms, monotone extraction and sound paths") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const WeightedComplex x = random_complex(seed, true);
    CAPTURE(seed);
    const auto facets = scx::testing::incident_facets(x);
    std::map<Simplex, DistanceMap> from;
    for (const Simplex& s : facets) from.emplace(s, scx::sssp(x, s));

    for (const Simplex& a : facets) {
      const DistanceMap& ta = from.at(a);
      CHECK(ta.distance(a) == 0);

      double last = 0;
      for (const auto& e : ta.entries()) {
        CHECK(e.distance >= last);
        last = e.distance;
        if (e.predecessor) {
          CHECK(e.distance == ta.distance(e.predecessor->simplex) + *x.weight(e.predecessor->via));
          CHECK(e.predecessor->simplex.join(e.simplex) == e.predecessor->via);
        } else {
          CHECK(e.simplex == a);
        }
      }

      for (const Simplex& b : facets) {
        const double ab = ta.distance(b);
        CHECK(ab == from.at(b).distance(a));
        if (!std::isinf(ab)) {
          const auto path = scx::shortest_path(x, a, b);
          REQUIRE(path);
          CHECK(scx::is_d_path(x, path->simplices));
          CHECK(path->total == ab);
          double sum = 0;
          for (const Simplex& tau : path->via) sum += *x.weight(tau);
          CHECK(sum == ab);
        } else {
          CHECK_FALSE(scx::shortest_path(x, a, b));
        }
        for (const Simplex& c : facets) {
          const double bc = from.at(b).distance(c);
          const double ac = ta.distance(c);
          if (!std::isinf(ab) && !std::isinf(bc)) CHECK(ac <= ab + bc);
        }
      }
    }
  }
}

TEST_CASE("property: deleting a top simplex never shortens a distance") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const WeightedComplex x = random_complex(seed, true);
    if (x.top_count() == 0) continue;
    CAPTURE(seed);
    const auto facets = scx::testing::incident_facets(x);
    const std::size_t removed = seed % x.top_count();
    const WeightedComplex smaller = scx::testing::without_top(x, removed);
    for (const Simplex& s : facets) {
      const DistanceMap before = scx::sssp(x, s);
      const DistanceMap after = scx::sssp(smaller, s);
      for (const Simplex& u : facets) CHECK(after.distance(u) >= before.distance(u));
    }
  }
}

TEST_CASE("property: d=1 matches graph Dijkstra") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    scx::GeneratorConfig cfg;
    cfg.d = 1;
    cfg.n = static_cast<scx::Vertex>(2 + seed % 30);
    cfg.p = 0.1 + 0.02 * static_cast<double>(seed % 20);
    cfg.weight_low = 0;
    cfg.weight_high = 20;
    cfg.integer_weights = seed % 2 == 0;
    cfg.seed = 77 + seed;
    const WeightedComplex x = scx::generate(cfg);
    std::vector<scx::oracle::Edge> edges;
    for (const auto& t : x.tops()) edges.push_back({t.simplex[0], t.simplex[1], t.weight});
    for (scx::Vertex s = 1; s <= cfg.n; ++s) {
      const DistanceMap t = scx::sssp(x, Simplex{s});
      const auto ref = scx::oracle::graph_dijkstra(cfg.n, edges, s);
      for (scx::Vertex v = 1; v <= cfg.n; ++v) {
        if (cfg.integer_weights) {
          CHECK(t.distance(Simplex{v}) == ref[v]);
        } else {
          CHECK(near(t.distance(Simplex{v}), ref[v]));
        }
      }
    }
  }
}

TEST_CASE("concurrent queries on a shared complex agree") {
  scx::GeneratorConfig cfg;
  cfg.n = 20;
  cfg.d = 2;
  cfg.p = 0.2;
  cfg.weight_low = 1;
  cfg.weight_high = 5;
  cfg.seed = 9;
  const WeightedComplex x = scx::generate(cfg);
  const auto facets = scx::testing::incident_facets(x);
  REQUIRE(facets.size() > 8);

  std::vector<std::future<std::vector<double>>> jobs;
  for (int k = 0; k < 8; ++k) {
    jobs.push_back(std::async(std::launch::async, [&, k] {
      const DistanceMap t = scx::sssp(x, facets[static_cast<std::size_t>(k)]);
      std::vector<double> out;
      for (const Simplex& s : facets) out.push_back(t.distance(s));
      return out;
    }));
  }
  for (int k = 0; k < 8; ++k) {
    const DistanceMap t = scx::sssp(x, facets[static_cast<std::size_t>(k)]);
    const auto got = jobs[static_cast<std::size_t>(k)].get();
    for (std::size_t i = 0; i < facets.size(); ++i) CHECK(got[i] == t.distance(facets[i]));
  }
}
