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

#ifndef RARITY_BINOMTAIL_REFERENCE_HPP_
#define RARITY_BINOMTAIL_REFERENCE_HPP_

#include <cstdint>
#include <string_view>

// Published parameters and headline values the report reproduces.
namespace rarity::binomtail::reference {

// One second at 44.1 kHz.
inline constexpr std::uint64_t kSamplesPerSecond = 44100;

// Continuity: at least 99.4% proximate moves, K = floor(0.994 * 44100).
inline constexpr std::string_view kContinuityRatio = "0.994";
inline constexpr std::uint64_t kContinuityThreshold = 43835;
inline constexpr std::string_view kContinuityProbability = "1.24355865e-2018";
// Calibration tolerance on log10 tight enough that p* reproduces all nine
// published digits.
inline constexpr double kCalibrationTolerance = 1e-12;
// The proximity model's own per-step probability (epsilon = 0.1).
inline constexpr std::string_view kEpsilonModelP = "1/10";

// Zero crossings: at most 5% crossings for a fair coin.
inline constexpr std::uint64_t kZeroCrossingLimit = 2205;
inline constexpr std::string_view kZeroCrossingP = "1/2";
inline constexpr std::string_view kChernoffBound = "4.1484712e-9474";

// One in 10^80: atoms in the observable universe.
inline constexpr long kCrossoverLog10 = -80;
inline constexpr std::uint64_t kCrossoverApprox = 1750;

// Figure ranges.
inline constexpr std::uint64_t kFigureOneMax = 44100;
inline constexpr std::uint64_t kFigureTwoMax = 2000;

}  // namespace rarity::binomtail::reference

#endif  // RARITY_BINOMTAIL_REFERENCE_HPP_
