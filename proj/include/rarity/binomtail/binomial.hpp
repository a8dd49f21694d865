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

#ifndef RARITY_BINOMTAIL_BINOMIAL_HPP_
#define RARITY_BINOMTAIL_BINOMIAL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rarity/direction.hpp"
#include "rarity/xprec/log_magnitude.hpp"
#include "rarity/xprec/xreal.hpp"

namespace rarity::binomtail {

using xprec::LogMagnitude;
using xprec::Precision;
using xprec::XReal;

using rarity::Direction;

/// n Bernoulli trials with success probability p, 0 < p < 1 strictly.
/// When p was given as a ratio of integers the exact value is kept too, so
/// the rational oracle can run on the same spec.
class BinomialSpec {
 public:
  BinomialSpec(std::uint64_t n, XReal p);
  BinomialSpec(std::uint64_t n, const mpq_class& p, Precision prec);

  /// "1/2" keeps an exact ratio; "0.5" keeps the exact decimal as well.
  static BinomialSpec parse(std::uint64_t n, std::string_view p, Precision prec);

  std::uint64_t n() const { return n_; }
  const XReal& p() const { return p_; }
  const std::optional<mpq_class>& exact_p() const { return exact_p_; }
  Precision precision() const { return p_.precision(); }

 private:
  std::uint64_t n_;
  XReal p_;
  std::optional<mpq_class> exact_p_;
};

struct TailQuery {
  BinomialSpec spec;
  std::uint64_t threshold;  // K, 0 <= K <= n
  Direction direction;

  TailQuery(BinomialSpec s, std::uint64_t k, Direction d);
};

/// log10 C(n, k). Exact big-integer path for n <= 10^5, log-gamma beyond.
XReal log10_binomial_coefficient(std::uint64_t n, std::uint64_t k, Precision prec);

/// log10 of C(n,k) p^k (1-p)^(n-k).
LogMagnitude log10_pmf(const BinomialSpec& spec, std::uint64_t k);

/// P(X >= K) or P(X <= K) for X ~ Bin(n, p), in the log domain.
///
/// Terms are generated from one anchor PMF value by the ratio
/// pmf(k+1)/pmf(k) = (n-k)/(k+1) * p/(1-p), walking outward from the point
/// of the range nearest the mode so terms only shrink, and stopping once the
/// geometric bound on the remainder is below the working precision. A tail
/// that contains the mode is computed as log1p(-complement) whenever the
/// complement is small, which keeps the log accurate for tails close to 1.
LogMagnitude tail(const TailQuery& query);

/// Precomputed per-probability constants shared by many tail evaluations
/// with the same p (sweeps, calibration).
class TailEngine {
 public:
  explicit TailEngine(const XReal& p);

  const XReal& p() const { return p_; }
  Precision precision() const { return p_.precision(); }

  LogMagnitude pmf(std::uint64_t n, std::uint64_t k) const;
  /// Sum of pmf(k) for k in [lo, hi].
  LogMagnitude range(std::uint64_t n, std::uint64_t lo, std::uint64_t hi) const;
  LogMagnitude tail(std::uint64_t n, std::uint64_t threshold, Direction d) const;

 private:
  std::uint64_t mode(std::uint64_t n) const;

  Precision work_;
  XReal p_;
  XReal log10_p_;
  XReal log10_q_;
  XReal odds_;      // p / (1-p)
  XReal inv_odds_;  // (1-p) / p
};

/// Chernoff bound exp(-n D(a || p)) with a = k/n and D the Bernoulli
/// Kullback-Leibler divergence. Returns 1 when a is not strictly on the
/// bounding side of p (a < p for lower, a > p for upper).
LogMagnitude chernoff(const BinomialSpec& spec, std::uint64_t k, Direction d);

}  // namespace rarity::binomtail

#endif  // RARITY_BINOMTAIL_BINOMIAL_HPP_
