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

#include "rarity/audiostats/noise.hpp"

#include <vector>

namespace rarity::audiostats {

AudioBuffer white_noise(std::uint64_t n, std::uint64_t seed, double amplitude,
                        double sample_rate) {
  if (n < 1) throw std::invalid_argument("white noise needs at least one sample");
  if (!(amplitude > 0 && amplitude <= 1)) throw std::invalid_argument("amplitude must be in (0, 1]");
  NoiseEngine engine(seed);
  std::vector<double> samples(n);
  for (auto& s : samples) s = amplitude * (2.0 * unit_uniform(engine) - 1.0);
  return AudioBuffer(std::move(samples), sample_rate);
}

}  // namespace rarity::audiostats
