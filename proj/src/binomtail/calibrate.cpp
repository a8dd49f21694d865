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

#include "rarity/binomtail/calibrate.hpp"

namespace rarity::binomtail {

namespace {

constexpr int kMaxIterations = 4000;
constexpr long kSmallestLog10P = -10000000;

}  // namespace

Calibration calibrate_p(std::uint64_t n, std::uint64_t K, const XReal& target_log10,
                        double tolerance) {
  if (K > n) throw DomainError("calibration needs K <= n");
  if (target_log10.sign() >= 0) throw NoRootError("target log10 must be negative");
  if (K == 0) throw NoRootError("upper tail with K = 0 is identically 1");

  const Precision prec = target_log10.precision();
  auto tail_at = [&](const XReal& p) { return TailEngine(p).tail(n, K, Direction::upper); };
  auto log_at = [&](const XReal& p) {
    LogMagnitude t = tail_at(p);
    return t.is_zero() ? XReal(static_cast<long>(kSmallestLog10P) * 1000, prec) : t.log10();
  };

  int iterations = 0;
  // tail(hi) > target throughout; hi = 1 stands for the limit tail = 1.
  XReal hi(1L, prec);
  XReal lo(0.5, prec);
  XReal f_lo = log_at(lo);
  while (f_lo >= target_log10) {
    ++iterations;
    hi = lo;
    lo = lo * lo;
    if (xprec::log10(lo) < XReal(kSmallestLog10P, prec))
      throw NoRootError("target is below the tail at p = 1e-10000000");
    f_lo = log_at(lo);
  }

  const XReal tol(tolerance, prec);
  while (iterations < kMaxIterations) {
    ++iterations;
    const bool wide = hi / lo > XReal(2L, prec);
    XReal mid = wide ? xprec::sqrt(lo * hi) : div(lo + hi, 2);
    if (mid <= lo || mid >= hi) break;
    LogMagnitude achieved = tail_at(mid);
    XReal f_mid = achieved.is_zero() ? XReal(static_cast<long>(kSmallestLog10P) * 1000, prec)
                                     : achieved.log10();
    XReal gap = f_mid - target_log10;
    if (xprec::abs(gap) <= tol)
      return Calibration{mid, achieved, xprec::abs(gap).to_double(), lo, hi, iterations};
    if (gap.sign() < 0)
      lo = mid;
    else
      hi = mid;
  }
  throw NoRootError("bisection stalled before reaching the tolerance; raise the precision");
}

}  // namespace rarity::binomtail
