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

#ifndef SCX_TESTS_SUPPORT_HPP
#define SCX_TESTS_SUPPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "scx/complex.hpp"
#include "scx/format.hpp"
#include "scx/generator.hpp"

namespace scx::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(SCX_FIXTURE_DIR) + "/" + name;
}

inline WeightedComplex fixture(const std::string& name) {
  return load_scx(fixture_path(name));
}

/// Every (d-1)-simplex incident to some top simplex.
inline std::vector<Simplex> incident_facets(const WeightedComplex& x) {
  std::vector<Simplex> out;
  for (FacetId f = 0; f < x.facet_count(); ++f) out.push_back(x.facet(f));
  return out;
}

/// Every d-subset of {1..n}, lexicographic.
inline std::vector<Simplex> all_facets(const WeightedComplex& x) {
  std::vector<Simplex> out;
  const auto k = static_cast<std::size_t>(x.dim());
  std::vector<Vertex> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<Vertex>(i + 1);
  const Vertex n = x.vertex_count();
  if (k > n) return out;
  while (true) {
    out.push_back(Simplex::from_sorted(c));
    std::size_t i = k;
    while (i-- > 0 && c[i] == n - (k - 1 - i)) {
    }
    if (i == static_cast<std::size_t>(-1)) break;
    ++c[i];
    for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

/// The small-instance corpus used for oracle comparisons: n <= 7,
/// d in {1,2,3}, p in {0.2,0.5,0.8}, integer weights 1..10.
inline GeneratorConfig small_config(std::uint64_t index) {
  static constexpr double kProbabilities[] = {0.2, 0.5, 0.8};
  GeneratorConfig cfg;
  cfg.d = static_cast<int>(index % 3) + 1;
  cfg.p = kProbabilities[(index / 3) % 3];
  // n cycles through d+2 .. 7
  const auto span = static_cast<std::uint64_t>(7 - (cfg.d + 2) + 1);
  cfg.n = static_cast<Vertex>(cfg.d + 2 + (index / 9) % span);
  cfg.weight_low = 1;
  cfg.weight_high = 10;
  cfg.integer_weights = true;
  cfg.seed = 0x5eed0000 + index;
  return cfg;
}

inline WeightedComplex without_top(const WeightedComplex& x, std::size_t index) {
  std::vector<TopSimplex> tops(x.tops().begin(), x.tops().end());
  tops.erase(tops.begin() + static_cast<std::ptrdiff_t>(index));
  return WeightedComplex(x.dim(), x.vertex_count(), std::move(tops));
}

}  // namespace scx::testing

#endif  // SCX_TESTS_SUPPORT_HPP
