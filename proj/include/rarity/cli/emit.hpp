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

#ifndef RARITY_CLI_EMIT_HPP_
#define RARITY_CLI_EMIT_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "rarity/binomtail/sweep.hpp"

namespace rarity::cli {

struct PlotOptions {
  std::string title;
  std::string stamp;  // written as an XML comment
  std::optional<double> threshold_log10 = -80.0;
};

/// Header `n,log10_p`, 15 significant digits per value.
std::string sweep_csv(const binomtail::SweepSeries& series);

/// Self-contained SVG 1.1 line chart, viewBox 0 0 960 600. A one-point
/// series is drawn as a single circle.
std::string sweep_svg(const binomtail::SweepSeries& series, const PlotOptions& options);

/// Throws std::runtime_error naming the path when it cannot be written.
void write_text_file(const std::filesystem::path& path, std::string_view content);

void emit_sweep(const binomtail::SweepSeries& series, const std::filesystem::path& csv,
                const std::optional<std::filesystem::path>& svg, const PlotOptions& options);

}  // namespace rarity::cli

#endif  // RARITY_CLI_EMIT_HPP_
