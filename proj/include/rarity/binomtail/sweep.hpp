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

#ifndef RARITY_BINOMTAIL_SWEEP_HPP_
#define RARITY_BINOMTAIL_SWEEP_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rarity/binomtail/binomial.hpp"

namespace rarity::binomtail {

/// Window-length sweep. The threshold scales with n:
/// K(n) = floor(r n) for upper tails and ceil(r n) for lower tails, with r
/// kept as an exact rational so 0.994 * 500 lands on 497, not 496.
struct SweepConfig {
  std::uint64_t n_min = 2;
  std::uint64_t n_max = 44100;
  mpq_class threshold_ratio{994, 1000};
  XReal p;
  unsigned workers = 1;

  void validate() const;
};

std::uint64_t threshold_for(std::uint64_t n, const mpq_class& ratio, Direction d);

struct SweepPoint {
  std::uint64_t n;
  std::uint64_t threshold;
  LogMagnitude log10_p;
};

struct SweepSeries {
  std::vector<SweepPoint> points;  // strictly increasing in n
};

/// One tail evaluation per n in [n_min, n_max]. The result does not depend on
/// config.workers.
SweepSeries sweep(const SweepConfig& config, Direction d);

/// Smallest n in the series with log10 P < threshold (exact zeros count).
std::optional<std::uint64_t> crossover(const SweepSeries& series, const XReal& threshold_log10);

/// Smallest n in the configured range with log10 P < threshold, evaluating
/// the sweep lazily in blocks. Throws DomainError unless threshold < 0.
std::optional<std::uint64_t> crossover(const SweepConfig& config, Direction d,
                                       const XReal& threshold_log10);

/// Least-squares line through (n, log10 P).
struct LineFit {
  double slope;
  double intercept;
  double r_squared;
};
LineFit fit_line(const SweepSeries& series);

}  // namespace rarity::binomtail

#endif  // RARITY_BINOMTAIL_SWEEP_HPP_
