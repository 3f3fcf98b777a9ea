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

#include "scx/generator.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "scx/error.hpp"

namespace scx {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kMaxCandidates = std::uint64_t{1} << 32;

[[noreturn]] void bad_config(const std::string& what) {
  throw Error(ErrorCode::ConfigInvalid, what);
}

// Advances to the next k-subset of {1..n} in lexicographic order.
bool next_combination(std::vector<Vertex>& c, Vertex n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - (k - 1 - i)) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t counter) noexcept {
  std::uint64_t z = seed + (counter + 1) * kGolden;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double unit_draw(std::uint64_t seed, std::uint64_t rank,
                 std::uint32_t stream) noexcept {
  const std::uint64_t bits = counter_hash(seed, 2 * rank + stream);
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays exact because r * (n-k+i) is divisible by i.
    const std::uint64_t g = std::gcd(r, i);
    const std::uint64_t num = n - k + i;
    const std::uint64_t a = r / g;
    const std::uint64_t b = num / (i / g);
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r = a * b;
  }
  return r;
}

void check_config(const GeneratorConfig& cfg) {
  if (cfg.d < 1) bad_config("d must be at least 1");
  if (static_cast<std::uint64_t>(cfg.d) >= cfg.n) bad_config("d must be less than n");
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) bad_config("p must lie in [0, 1]");
  if (!std::isfinite(cfg.weight_low) || !std::isfinite(cfg.weight_high)) {
    bad_config("weight bounds must be finite");
  }
  if (cfg.weight_low < 0.0) bad_config("weight_low must be non-negative");
  if (cfg.weight_low > cfg.weight_high) bad_config("weight_low exceeds weight_high");
  if (cfg.integer_weights &&
      std::ceil(cfg.weight_low) > std::floor(cfg.weight_high)) {
    bad_config("no integer between weight_low and weight_high");
  }
  if (binomial(cfg.n, static_cast<std::uint64_t>(cfg.d) + 1) > kMaxCandidates) {
    bad_config("too many candidate simplices (C(n, d+1) > 2^32)");
  }
}

WeightedComplex generate(const GeneratorConfig& cfg) {
  check_config(cfg);
  const auto k = static_cast<std::size_t>(cfg.d) + 1;
  const double int_low = std::ceil(cfg.weight_low);
  const double int_span = std::floor(cfg.weight_high) - int_low + 1.0;

  std::vector<TopSimplex> tops;
  std::vector<Vertex> c(k);
  std::iota(c.begin(), c.end(), Vertex{1});
  std::uint64_t rank = 0;
  do {
    // u < p never holds for p == 0 and always holds for p == 1.
    if (unit_draw(cfg.seed, rank, 0) < cfg.p) {
      const double u = unit_draw(cfg.seed, rank, 1);
      double w;
      if (cfg.integer_weights) {
        w = std::min(int_low + std::floor(u * int_span), std::floor(cfg.weight_high));
      } else {
        w = cfg.weight_low + u * (cfg.weight_high - cfg.weight_low);
      }
      tops.push_back({Simplex::from_sorted(c), w});
    }
    ++rank;
  } while (next_combination(c, cfg.n));

  return WeightedComplex(cfg.d, cfg.n, std::move(tops));
}

}  // namespace scx
