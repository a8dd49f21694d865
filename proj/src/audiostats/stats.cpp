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

#include "rarity/audiostats/stats.hpp"

#include <glob.h>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <stdexcept>
#include <variant>

#include "rarity/parallel.hpp"

namespace rarity::audiostats {

namespace {

void require_pairs(const AudioBuffer& buffer) {
  if (buffer.size() < 2) throw std::domain_error("rate statistics need at least 2 samples");
}

std::uint64_t count_crossings(std::span<const double> x) {
  std::uint64_t n = 0;
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i - 1] * x[i] < 0) ++n;
  return n;
}

std::uint64_t count_proximate(std::span<const double> x, double epsilon) {
  std::uint64_t n = 0;
  for (std::size_t i = 1; i < x.size(); ++i)
    if (std::fabs(x[i] - x[i - 1]) < epsilon) ++n;
  return n;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

double zero_crossing_rate(const AudioBuffer& buffer) {
  require_pairs(buffer);
  return static_cast<double>(count_crossings(buffer.samples())) / (buffer.size() - 1);
}

double proximity_rate(const AudioBuffer& buffer, double epsilon) {
  require_pairs(buffer);
  if (!(epsilon > 0)) throw std::domain_error("epsilon must be positive");
  return static_cast<double>(count_proximate(buffer.samples(), epsilon)) / (buffer.size() - 1);
}

SignalStats signal_stats(const AudioBuffer& buffer, double epsilon) {
  return SignalStats{zero_crossing_rate(buffer), proximity_rate(buffer, epsilon), epsilon,
                     buffer.size() - 1};
}

double white_noise_proximity(double epsilon) { return epsilon - epsilon * epsilon / 4.0; }

std::vector<std::string> expand_inputs(const std::vector<std::string>& patterns) {
  std::vector<std::string> out;
  for (const auto& pattern : patterns) {
    if (pattern.find_first_of("*?[") == std::string::npos) {
      out.push_back(pattern);
      continue;
    }
    glob_t g{};
    if (::glob(pattern.c_str(), 0, nullptr, &g) == 0)
      for (std::size_t i = 0; i < g.gl_pathc; ++i) out.emplace_back(g.gl_pathv[i]);
    globfree(&g);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CorpusSummary corpus_summary(const std::vector<std::string>& paths, double epsilon,
                             unsigned workers) {
  if (!(epsilon > 0)) throw std::domain_error("epsilon must be positive");
  std::vector<std::string> sorted = paths;
  std::sort(sorted.begin(), sorted.end());

  using Outcome = std::variant<FileStats, SkippedFile>;
  std::vector<std::optional<Outcome>> outcomes(sorted.size());
  parallel_for(sorted.size(), workers, [&](std::size_t i) {
    try {
      AudioBuffer buffer = load_wav(sorted[i]);
      outcomes[i] = FileStats{sorted[i], buffer.size(), buffer.sample_rate(),
                              signal_stats(buffer, epsilon)};
    } catch (const std::exception& e) {
      outcomes[i] = SkippedFile{sorted[i], e.what()};
    }
  });

  CorpusSummary summary;
  std::uint64_t pairs = 0, crossings = 0, proximate = 0;
  for (auto& o : outcomes) {
    if (auto* f = std::get_if<FileStats>(&*o)) {
      pairs += f->stats.pair_count;
      crossings += std::llround(f->stats.zcr * f->stats.pair_count);
      proximate += std::llround(f->stats.proximity_rate * f->stats.pair_count);
      summary.files.push_back(std::move(*f));
    } else {
      summary.skipped.push_back(std::get<SkippedFile>(std::move(*o)));
    }
  }
  if (summary.files.empty()) throw std::runtime_error("corpus is empty: no readable WAV files");
  summary.pooled = SignalStats{static_cast<double>(crossings) / pairs,
                               static_cast<double>(proximate) / pairs, epsilon, pairs};
  return summary;
}

void write_corpus_csv(std::ostream& out, const CorpusSummary& summary) {
  out << "file,samples,sample_rate,zcr,proximity_rate,epsilon\n";
  auto row = [&](const std::string& name, std::uint64_t samples, const std::string& rate,
                 const SignalStats& s) {
    out << csv_field(name) << ',' << samples << ',' << rate << ',' << std::setprecision(10)
        << s.zcr << ',' << s.proximity_rate << ',' << s.epsilon << std::setprecision(6) << '\n';
  };
  std::uint64_t total = 0;
  for (const auto& f : summary.files) {
    row(f.path, f.samples, std::to_string(std::lround(f.sample_rate)), f.stats);
    total += f.samples;
  }
  // Pooled row has no single sample rate.
  row("POOLED", total, "", summary.pooled);
}

}  // namespace rarity::audiostats
