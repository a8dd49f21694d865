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

#ifndef RARITY_SPACES_SCENARIOS_HPP_
#define RARITY_SPACES_SCENARIOS_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rarity/spaces/quantity.hpp"
#include "rarity/xprec/log_magnitude.hpp"

namespace rarity::spaces {

enum class Provenance {
  formula,        // recomputed here from exact parameters
  paper_literal,  // published magnitude kept as-is
};

std::string_view to_string(Provenance p);

struct Scenario {
  std::string id;
  std::string description;
  Quantity quantity;
  Provenance provenance;
  std::string published_log2;   // verbatim, may be empty
  std::string published_order;  // verbatim integer column
  /// Recomputation from the stated parameters for literal rows.
  std::optional<Quantity> derived;
  std::string derived_note;
};

/// Values the two "music-like" rows take from the probability engine.
struct ScenarioInputs {
  xprec::LogMagnitude zero_crossing_bound;  // Chernoff, 44100 / 2205 / 1/2
  xprec::LogMagnitude continuity_tail;      // upper tail at the calibrated p
  XReal continuity_p;
};

/// Runs the Chernoff bound and the flagship calibration at `prec`.
ScenarioInputs compute_scenario_inputs(Precision prec = Precision{64});

std::vector<Scenario> builtin_scenarios(const ScenarioInputs& inputs);
std::vector<Scenario> builtin_scenarios(Precision prec = Precision{64});

/// Rows whose published size is not reproduced by their stated parameters.
/// render_table marks exactly these.
const std::set<std::string>& non_recomputable_rows();

/// X grid positions per second, N tracks, M parameters per synth, Y pitches
/// (Y + 1 choices with "hold").
struct DawSpaceSpec {
  std::uint64_t x;
  std::uint64_t n;
  std::uint64_t m;
  std::uint64_t y;
};

/// 14-bit parameter range.
inline constexpr std::uint64_t kParameterLevels = 16384;

/// log10 of ((Y+1) * 16384 * M * N)^X.
XReal daw_space_log10(const DawSpaceSpec& spec, Precision prec = Precision{40});

}  // namespace rarity::spaces

#endif  // RARITY_SPACES_SCENARIOS_HPP_
