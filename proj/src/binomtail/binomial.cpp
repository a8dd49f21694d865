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

#include "rarity/binomtail/binomial.hpp"

#include <algorithm>
#include <utility>

namespace rarity::binomtail {

namespace {

// Guard digits for intermediate sums; results are rounded back to the
// caller's precision.
constexpr int kGuardDigits = 10;

// Above this n the exact coefficient is only built when the short side is
// small; otherwise log-gamma is used.
constexpr std::uint64_t kExactCoefficientLimit = 100000;
constexpr std::uint64_t kExactShortSideLimit = 4000;

XReal lngamma_of(std::uint64_t x, Precision prec) {
  xprec::Builder out(prec);
  mpfr_set_ui(out.get(), static_cast<unsigned long>(x), MPFR_RNDN);
  mpfr_lngamma(out.get(), out.get(), MPFR_RNDN);
  return std::move(out).finish();
}

}  // namespace

BinomialSpec::BinomialSpec(std::uint64_t n, XReal p) : n_(n), p_(std::move(p)) {
  if (n_ < 1) throw DomainError("binomial spec needs n >= 1");
  if (p_.sign() <= 0 || p_ >= 1L)
    throw DomainError("per-trial probability must lie strictly between 0 and 1");
}

BinomialSpec::BinomialSpec(std::uint64_t n, const mpq_class& p, Precision prec)
    : BinomialSpec(n, XReal::from_rational(p, prec)) {
  if (p <= 0 || p >= 1)
    throw DomainError("per-trial probability must lie strictly between 0 and 1");
  exact_p_ = p;
}

BinomialSpec BinomialSpec::parse(std::uint64_t n, std::string_view p, Precision prec) {
  return BinomialSpec(n, xprec::parse_rational(p), prec);
}

TailQuery::TailQuery(BinomialSpec s, std::uint64_t k, Direction d)
    : spec(std::move(s)), threshold(k), direction(d) {
  if (threshold > spec.n()) throw DomainError("tail threshold K exceeds n");
}

XReal log10_binomial_coefficient(std::uint64_t n, std::uint64_t k, Precision prec) {
  if (k > n) throw DomainError("binomial coefficient needs k <= n");
  const std::uint64_t short_side = std::min(k, n - k);
  if (short_side == 0) return XReal(prec);
  if (n <= kExactCoefficientLimit || short_side <= kExactShortSideLimit) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(short_side));
    return xprec::log10(c, prec);
  }
  // log-gamma values near n ln n lose about log10(n ln n) digits to
  // cancellation; 20 extra digits covers n up to 10^15.
  const Precision wide = prec.plus(20);
  XReal ln_c = lngamma_of(n + 1, wide) - lngamma_of(k + 1, wide) - lngamma_of(n - k + 1, wide);
  return (ln_c / xprec::ln10(wide)).with_precision(prec);
}

LogMagnitude log10_pmf(const BinomialSpec& spec, std::uint64_t k) {
  if (k > spec.n()) throw DomainError("pmf needs k <= n");
  return TailEngine(spec.p()).pmf(spec.n(), k);
}

LogMagnitude tail(const TailQuery& query) {
  return TailEngine(query.spec.p()).tail(query.spec.n(), query.threshold, query.direction);
}

TailEngine::TailEngine(const XReal& p)
    : work_(p.precision().plus(kGuardDigits)), p_(p) {
  if (p_.sign() <= 0 || p_ >= 1L)
    throw DomainError("per-trial probability must lie strictly between 0 and 1");
  XReal pw = p_.with_precision(work_);
  XReal qw = XReal(1L, work_) - pw;
  log10_p_ = xprec::log10(pw);
  log10_q_ = xprec::log10(qw);
  odds_ = pw / qw;
  inv_odds_ = qw / pw;
}

std::uint64_t TailEngine::mode(std::uint64_t n) const {
  XReal scaled = mul(p_.with_precision(work_), n + 1);
  auto m = static_cast<std::uint64_t>(scaled.floor_to_int());
  return std::min(m, n);
}

LogMagnitude TailEngine::pmf(std::uint64_t n, std::uint64_t k) const {
  if (k > n) throw DomainError("pmf needs k <= n");
  XReal log_c = log10_binomial_coefficient(n, k, work_);
  XReal value = log_c + mul(log10_p_, k) + mul(log10_q_, n - k);
  return LogMagnitude::from_log10(value.with_precision(precision()));
}

LogMagnitude TailEngine::range(std::uint64_t n, std::uint64_t lo, std::uint64_t hi) const {
  if (hi > n) throw DomainError("pmf range exceeds n");
  if (lo > hi) return LogMagnitude::zero(precision());

  const std::uint64_t start = std::clamp(mode(n), lo, hi);
  XReal anchor = log10_binomial_coefficient(n, start, work_) + mul(log10_p_, start) +
                 mul(log10_q_, n - start);

  // Terms relative to pmf(start); all of them are <= 1.
  const XReal one(1L, work_);
  const XReal cutoff = xprec::exp10(XReal(static_cast<long>(-(work_.digits + 2)), work_));
  XReal sum = one;

  // Stops once the remainder, bounded by the geometric series with the
  // current (largest remaining) ratio, cannot move the sum.
  auto negligible = [&](const XReal& term, const XReal& ratio) {
    if (ratio >= 1L) return false;
    XReal remainder = term * ratio / (one - ratio);
    return remainder < sum * cutoff;
  };

  XReal term = one;
  for (std::uint64_t k = start; k < hi; ++k) {
    XReal ratio = div(mul(odds_, n - k), static_cast<long>(k + 1));
    term = term * ratio;
    sum = sum + term;
    if (negligible(term, ratio)) break;
  }
  term = one;
  for (std::uint64_t k = start; k > lo; --k) {
    XReal ratio = div(mul(inv_odds_, k), static_cast<long>(n - k + 1));
    term = term * ratio;
    sum = sum + term;
    if (negligible(term, ratio)) break;
  }
  return LogMagnitude::from_log10((anchor + xprec::log10(sum)).with_precision(precision()));
}

LogMagnitude TailEngine::tail(std::uint64_t n, std::uint64_t threshold, Direction d) const {
  if (threshold > n) throw DomainError("tail threshold K exceeds n");
  const bool upper = d == Direction::upper;
  const std::uint64_t lo = upper ? threshold : 0;
  const std::uint64_t hi = upper ? n : threshold;
  if (lo == 0 && hi == n) return LogMagnitude::one(precision());

  const std::uint64_t m = mode(n);
  if (lo <= m && m <= hi) {
    // The queried side holds the bulk; use 1 - complement when that is
    // well conditioned.
    LogMagnitude complement = upper ? range(n, 0, threshold - 1) : range(n, threshold + 1, n);
    const XReal half_log = xprec::log10(XReal(0.5, work_));
    if (complement.is_zero()) return LogMagnitude::one(precision());
    if (complement.log10().with_precision(work_) < half_log) {
      XReal c = xprec::exp10(complement.log10().with_precision(work_));
      XReal log_tail = xprec::log1p(-c) / xprec::ln10(work_);
      return LogMagnitude::from_log10(log_tail.with_precision(precision()));
    }
  }
  return range(n, lo, hi);
}

LogMagnitude chernoff(const BinomialSpec& spec, std::uint64_t k, Direction d) {
  const std::uint64_t n = spec.n();
  if (k > n) throw DomainError("chernoff needs k <= n");
  const Precision prec = spec.precision();
  const Precision work = prec.plus(kGuardDigits);

  const XReal a = XReal::from_rational(mpq_class(mpz_class(static_cast<unsigned long>(k)),
                                                 mpz_class(static_cast<unsigned long>(n))),
                                       work);
  const XReal p = spec.p().with_precision(work);
  const bool bounding = d == Direction::lower ? a < p : a > p;
  if (!bounding) return LogMagnitude::one(prec);

  const XReal one(1L, work);
  XReal divergence(work);
  if (k > 0) divergence = divergence + a * xprec::ln(a / p);
  if (k < n) divergence = divergence + (one - a) * xprec::ln((one - a) / (one - p));
  XReal log10_bound = -mul(divergence, n) / xprec::ln10(work);
  return LogMagnitude::from_log10(log10_bound.with_precision(prec));
}

}  // namespace rarity::binomtail
