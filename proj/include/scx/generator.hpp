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

#ifndef SCX_GENERATOR_HPP
#define SCX_GENERATOR_HPP

#include <cstdint>

#include "scx/complex.hpp"

namespace scx {

struct GeneratorConfig {
  Vertex n = 0;
  int d = 1;
  double p = 0.5;  // inclusion probability of each candidate top simplex
  double weight_low = 1.0;
  double weight_high = 1.0;
  bool integer_weights = false;
  std::uint64_t seed = 0;
};

/// Throws Error(ConfigInvalid) unless 1 <= d < n, 0 <= p <= 1, the weight
/// bounds are finite with 0 <= low <= high (and contain an integer when
/// integer_weights is set), and C(n, d+1) fits the candidate limit.
void check_config(const GeneratorConfig& cfg);

/// Each of the C(n, d+1) candidate top simplices, ranked lexicographically,
/// is kept independently with probability p; kept simplices get a weight
/// drawn uniformly from [low, high] (or uniformly from the integers in that
/// range). Every draw is a pure function of (seed, rank, stream), so the
/// result is identical on every platform and independent of visiting order.
WeightedComplex generate(const GeneratorConfig& cfg);

/// The SplitMix64 output for the given counter under the given seed, i.e.
/// the finalizer applied to seed + (counter + 1) * 0x9E3779B97F4A7C15.
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t counter) noexcept;

/// Uniform in [0, 1) with 53 random bits. Stream 0 is the inclusion draw,
/// stream 1 the weight draw.
double unit_draw(std::uint64_t seed, std::uint64_t rank,
                 std::uint32_t stream) noexcept;

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

}  // namespace scx

#endif  // SCX_GENERATOR_HPP
