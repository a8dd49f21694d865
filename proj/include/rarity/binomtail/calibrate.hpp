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

#ifndef RARITY_BINOMTAIL_CALIBRATE_HPP_
#define RARITY_BINOMTAIL_CALIBRATE_HPP_

#include <cstdint>
#include <stdexcept>

#include "rarity/binomtail/binomial.hpp"

namespace rarity::binomtail {

class NoRootError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Calibration {
  XReal p;
  LogMagnitude achieved;  // upper tail at p
  double residual;        // |log10 achieved - target|
  XReal bracket_low;
  XReal bracket_high;
  int iterations;
};

/// Finds p with |log10 P(X >= K; n, p) - target| <= tolerance by bisection
/// on (0, 1). The upper tail is strictly increasing in p, so the root is
/// unique. Midpoints are geometric while the bracket spans more than a
/// factor of two (targets far below zero put p* near 0), arithmetic after.
/// Throws NoRootError when target >= 0, K == 0, or the target lies below the
/// tail at p = 10^-(10^7).
Calibration calibrate_p(std::uint64_t n, std::uint64_t K, const XReal& target_log10,
                        double tolerance = 1e-6);

}  // namespace rarity::binomtail

#endif  // RARITY_BINOMTAIL_CALIBRATE_HPP_
