// Copyright 2026 The Rarity Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <vector>

#include "rarity/audiostats/noise.hpp"
#include "rarity/parallel.hpp"

namespace rarity::audiostats {

namespace {

NoiseEngine partition_engine(std::uint64_t seed, std::uint64_t partition) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(partition), 0x6d6f6e74u};
  return NoiseEngine(seq);
}

}  // namespace

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw std::invalid_argument("Wilson interval needs trials >= 1");
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
  return Interval{std::clamp(std::min(center - half, phat), 0.0, 1.0),
                  std::clamp(std::max(center + half, phat), 0.0, 1.0)};
}

MonteCarloResult monte_carlo_tail(std::uint64_t n, std::uint64_t K, double p, Direction d,
                                  std::uint64_t trials, std::uint64_t seed, unsigned workers) {
  if (trials < 1) throw std::invalid_argument("Monte Carlo needs trials >= 1");
  if (!(p > 0 && p < 1)) throw std::invalid_argument("p must lie strictly between 0 and 1");
  if (K > n) throw std::invalid_argument("threshold K exceeds n");

  const std::uint64_t parts = std::min(kMonteCarloPartitions, trials);
  std::vector<std::uint64_t> hits(parts, 0);
  parallel_for(parts, workers, [&](std::size_t part) {
    NoiseEngine engine = partition_engine(seed, part);
    const std::uint64_t count = trials / parts + (part < trials % parts ? 1 : 0);
    std::uint64_t local = 0;
    for (std::uint64_t t = 0; t < count; ++t) {
      std::uint64_t k = 0;
      for (std::uint64_t i = 0; i < n; ++i)
        if (unit_uniform(engine) < p) ++k;
      if (d == Direction::upper ? k >= K : k <= K) ++local;
    }
    hits[part] = local;
  });

  std::uint64_t successes = 0;
  for (auto h : hits) successes += h;
  const Interval ci = wilson_interval(successes, trials);
  return MonteCarloResult{trials, successes, static_cast<double>(successes) / trials,
                          ci.low, ci.high, seed};
}

}  // namespace rarity::audiostats
