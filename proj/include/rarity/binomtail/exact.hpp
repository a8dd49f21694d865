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

#ifndef RARITY_BINOMTAIL_EXACT_HPP_
#define RARITY_BINOMTAIL_EXACT_HPP_

#include <cstdint>
#include <string>

#include "rarity/binomtail/binomial.hpp"

namespace rarity::binomtail {

/// Exact value of a binomial tail as a reduced big rational. This is the
/// independent oracle for tail(); it shares nothing with the log path but
/// the query type.
struct ExactTail {
  mpq_class value;

  /// Correctly rounded mantissa and exact decimal exponent.
  xprec::Scientific scientific(int significant = 9) const;
  /// log10 of the exact value at `prec`.
  LogMagnitude log10(Precision prec) const;
  /// "11/1024".
  std::string fraction() const { return value.get_str(); }
};

/// Requires the BinomialSpec to carry an exact rational p = a/b with 0 < a < b.
/// Sums C(n,k) a^k (b-a)^(n-k) over the shorter of the queried range and its
/// complement, then divides by b^n.
ExactTail tail_exact(const TailQuery& query);

/// Sum over k in [lo, hi] of C(n,k) a^k c^(n-k), exact.
mpz_class weighted_binomial_sum(std::uint64_t n, std::uint64_t lo, std::uint64_t hi,
                                const mpz_class& a, const mpz_class& c);

/// Scientific notation of a positive rational, rounded half-up on the exact
/// value.
xprec::Scientific exact_scientific(const mpq_class& value, int significant);

}  // namespace rarity::binomtail

#endif  // RARITY_BINOMTAIL_EXACT_HPP_
