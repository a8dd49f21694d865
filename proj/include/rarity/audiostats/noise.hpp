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

#ifndef RARITY_AUDIOSTATS_NOISE_HPP_
#define RARITY_AUDIOSTATS_NOISE_HPP_

#include <cstdint>
#include <random>
#include <string_view>

#include "rarity/audiostats/audio.hpp"
#include "rarity/direction.hpp"

namespace rarity::audiostats {

/// Generator behind every random draw. std::mt19937_64 has period
/// 2^19937 - 1 and its output sequence is fixed by the C++ standard, so
/// seeded runs agree across platforms.
using NoiseEngine = std::mt19937_64;
inline constexpr std::string_view kNoiseEngineName = "mt19937_64";

/// Uniform on [0, 1) from the top 53 bits of one draw. Used instead of
/// std::uniform_real_distribution, whose output is implementation-defined.
inline double unit_uniform(NoiseEngine& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

/// n i.i.d. samples uniform on [-amplitude, amplitude).
AudioBuffer white_noise(std::uint64_t n, std::uint64_t seed, double amplitude = 1.0,
                        double sample_rate = 44100.0);

struct MonteCarloResult {
  std::uint64_t trials;
  std::uint64_t successes;
  double estimate;
  double ci_low;   // 95% Wilson interval
  double ci_high;
  std::uint64_t seed;
};

struct Interval {
  double low;
  double high;
};

/// Wilson score interval for a binomial proportion.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                         double z = 1.959963984540054);

/// Number of independently seeded trial partitions. Fixed, so the result
/// depends on (seed, trials) and never on the worker count.
inline constexpr std::uint64_t kMonteCarloPartitions = 64;

/// Each trial draws n Bernoulli(p) outcomes and tests k >= K (upper) or
/// k <= K (lower).
MonteCarloResult monte_carlo_tail(std::uint64_t n, std::uint64_t K, double p, Direction d,
                                  std::uint64_t trials, std::uint64_t seed, unsigned workers = 1);

}  // namespace rarity::audiostats

#endif  // RARITY_AUDIOSTATS_NOISE_HPP_
