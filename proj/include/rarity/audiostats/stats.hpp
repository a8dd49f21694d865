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

#ifndef RARITY_AUDIOSTATS_STATS_HPP_
#define RARITY_AUDIOSTATS_STATS_HPP_

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "rarity/audiostats/audio.hpp"

namespace rarity::audiostats {

/// Successive-pair statistics of one signal.
struct SignalStats {
  double zcr = 0;             // pairs with x[i-1] * x[i] < 0
  double proximity_rate = 0;  // pairs with |x[i] - x[i-1]| < epsilon
  double epsilon = 0;
  std::uint64_t pair_count = 0;
};

/// Fraction of pairs with a strict sign change; exact zeros never count.
double zero_crossing_rate(const AudioBuffer& buffer);
/// Fraction of pairs with |x[i] - x[i-1]| < epsilon (strict).
double proximity_rate(const AudioBuffer& buffer, double epsilon);
SignalStats signal_stats(const AudioBuffer& buffer, double epsilon);

struct FileStats {
  std::string path;
  std::uint64_t samples;
  double sample_rate;
  SignalStats stats;
};

struct SkippedFile {
  std::string path;
  std::string reason;
};

struct CorpusSummary {
  std::vector<FileStats> files;    // ordered by path
  std::vector<SkippedFile> skipped;
  SignalStats pooled;              // weighted by pair_count
};

/// Expands glob patterns (plain paths pass through), sorted and de-duplicated.
std::vector<std::string> expand_inputs(const std::vector<std::string>& patterns);

/// Per-file and pooled statistics. Unreadable files land in `skipped`;
/// throws std::runtime_error when nothing could be read.
CorpusSummary corpus_summary(const std::vector<std::string>& paths, double epsilon,
                             unsigned workers = 1);

/// CSV with header file,samples,sample_rate,zcr,proximity_rate,epsilon.
void write_corpus_csv(std::ostream& out, const CorpusSummary& summary);

/// Expected proximity rate of i.i.d. uniform noise on [-1, 1]:
/// P(|x - y| < eps) = eps - eps^2 / 4 for 0 < eps <= 2.
double white_noise_proximity(double epsilon);

}  // namespace rarity::audiostats

#endif  // RARITY_AUDIOSTATS_STATS_HPP_
