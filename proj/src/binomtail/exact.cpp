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

#include "rarity/binomtail/exact.hpp"

namespace rarity::binomtail {

namespace {

mpz_class pow10(std::int64_t k) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return out;
}

// num/den >= 10^e
bool at_least_pow10(const mpz_class& num, const mpz_class& den, std::int64_t e) {
  if (e >= 0) return num >= den * pow10(e);
  return num * pow10(-e) >= den;
}

}  // namespace

mpz_class weighted_binomial_sum(std::uint64_t n, std::uint64_t lo, std::uint64_t hi,
                                const mpz_class& a, const mpz_class& c) {
  if (hi > n) throw DomainError("summation range exceeds n");
  mpz_class sum = 0;
  if (lo > hi) return sum;
  mpz_class coeff, a_pow, c_pow;
  mpz_bin_uiui(coeff.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(lo));
  mpz_pow_ui(a_pow.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(lo));
  mpz_pow_ui(c_pow.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n - lo));
  for (std::uint64_t k = lo;; ++k) {
    sum += coeff * a_pow * c_pow;
    if (k == hi) break;
    coeff *= static_cast<unsigned long>(n - k);
    mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(), static_cast<unsigned long>(k + 1));
    a_pow *= a;
    mpz_divexact(c_pow.get_mpz_t(), c_pow.get_mpz_t(), c.get_mpz_t());
  }
  return sum;
}

xprec::Scientific exact_scientific(const mpq_class& value, int significant) {
  if (significant < 1) throw DomainError("need at least one significant digit");
  if (value < 0) throw DomainError("scientific rendering needs a non-negative value");
  if (value == 0) return xprec::Scientific{"0.0", 0};
  const mpz_class& num = value.get_num();
  const mpz_class& den = value.get_den();

  auto e = static_cast<std::int64_t>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<std::int64_t>(mpz_sizeinbase(den.get_mpz_t(), 10));
  while (!at_least_pow10(num, den, e)) --e;
  while (at_least_pow10(num, den, e + 1)) ++e;

  // round(value * 10^(significant-1-e)), ties away from zero.
  const std::int64_t shift = significant - 1 - e;
  mpz_class scaled_num = shift >= 0 ? mpz_class(num * pow10(shift)) : num;
  mpz_class scaled_den = shift >= 0 ? den : mpz_class(den * pow10(-shift));
  mpz_class digits = (2 * scaled_num + scaled_den) / (2 * scaled_den);
  return xprec::make_scientific(digits, significant, e);
}

xprec::Scientific ExactTail::scientific(int significant) const {
  return exact_scientific(value, significant);
}

LogMagnitude ExactTail::log10(Precision prec) const {
  if (value == 0) return LogMagnitude::zero(prec);
  const Precision wide = prec.plus(6);
  if (value > mpq_class(1, 2)) {
    // Near 1 the log is tiny; take it from the exact complement.
    const mpq_class complement = 1 - value;
    if (complement == 0) return LogMagnitude::one(prec);
    const XReal c = XReal::from_rational(complement, wide);
    return LogMagnitude::from_log10((xprec::log1p(-c) / xprec::ln10(wide)).with_precision(prec));
  }
  XReal log_value =
      xprec::log10(value.get_num(), wide) - xprec::log10(value.get_den(), wide);
  return LogMagnitude::from_log10(log_value.with_precision(prec));
}

ExactTail tail_exact(const TailQuery& query) {
  const auto& exact_p = query.spec.exact_p();
  if (!exact_p) throw DomainError("exact tail needs p as a ratio of integers");
  const mpz_class& a = exact_p->get_num();
  const mpz_class& b = exact_p->get_den();
  if (a <= 0 || a >= b) throw DomainError("exact tail needs 0 < a < b for p = a/b");
  const mpz_class c = b - a;

  const std::uint64_t n = query.spec.n();
  const std::uint64_t K = query.threshold;
  const bool upper = query.direction == Direction::upper;
  const std::uint64_t lo = upper ? K : 0;
  const std::uint64_t hi = upper ? n : K;
  if (lo == 0 && hi == n) return ExactTail{mpq_class(1)};

  mpz_class total;
  mpz_pow_ui(total.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(n));

  // Complement range, non-empty because the queried range is not [0, n].
  const std::uint64_t clo = upper ? 0 : K + 1;
  const std::uint64_t chi = upper ? K - 1 : n;
  mpz_class numerator = (hi - lo) <= (chi - clo)
                            ? weighted_binomial_sum(n, lo, hi, a, c)
                            : mpz_class(total - weighted_binomial_sum(n, clo, chi, a, c));
  mpq_class value(numerator, total);
  value.canonicalize();
  return ExactTail{value};
}

}  // namespace rarity::binomtail
