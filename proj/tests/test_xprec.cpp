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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <thread>
#include <vector>

#include "rarity/xprec/log_magnitude.hpp"
#include "rarity/xprec/xreal.hpp"
#include "support/oracle.hpp"

using namespace rarity;
using namespace rarity::xprec;
using rarity::testing::agreeing_digits;
using rarity::testing::Rng;

namespace {
const Precision P{64};

XReal random_positive(Rng& rng, int max_exp10, Precision prec) {
  const double e = (rng.unit() * 2 - 1) * max_exp10;
  return exp10(XReal(e, prec));
}
}  // namespace

TEST_CASE("arith: additive inverse gives canonical zero") {
  const XReal one(1L, P);
  const XReal z = arith(ArithOp::add, one, XReal(-1L, P));
  CHECK(z.is_zero());
  CHECK(z.sign() == 0);
  CHECK(z == XReal(P));
}

TEST_CASE("arith: multiplicative identity") {
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const XReal x = random_positive(rng, 300, P) * XReal(rng.unit() < 0.5 ? -1L : 1L, P);
    CHECK(arith(ArithOp::mul, x, XReal(1L, P)) == x);
  }
}

TEST_CASE("arith: one third carries at least 62 correct digits") {
  const XReal third = arith(ArithOp::div, XReal(1L, P), XReal(3L, P));
  const std::string text = third.to_fixed(70);
  REQUIRE(text.rfind("0.", 0) == 0);
  int threes = 0;
  for (std::size_t i = 2; i < text.size() && text[i] == '3'; ++i) ++threes;
  CHECK(threes >= 62);
  const XReal exact = XReal::from_rational(mpq_class(1, 3), Precision{200});
  CHECK(agreeing_digits(third, exact) >= 62);
}

TEST_CASE("arith: division by zero is a domain error") {
  CHECK_THROWS_AS(arith(ArithOp::div, XReal(1L, P), XReal(P)), DomainError);
}

TEST_CASE("elementary: ln(1) is zero and ln of non-positive is rejected") {
  CHECK(elementary(ElementaryFn::ln, XReal(1L, P)).is_zero());
  CHECK_THROWS_AS(ln(XReal(P)), DomainError);
  CHECK_THROWS_AS(ln(XReal(-2L, P)), DomainError);
  CHECK_THROWS_AS(xprec::log10(XReal(-2L, P)), DomainError);
}

TEST_CASE("elementary: log10 of exact powers of ten") {
  for (unsigned long k : {0ul, 1ul, 7ul, 80ul, 1000ul, 123456ul, 1000000ul}) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 10, k);
    CHECK(xprec::log10(v, P) == static_cast<long>(k));
  }
  for (long k : {-300L, -1L, 0L, 5L, 300L})
    CHECK(elementary(ElementaryFn::log10, exp10(XReal(k, P))) == k);
}

TEST_CASE("elementary: exp(ln 2) round trip") {
  const XReal two(2L, P);
  const XReal back = elementary(ElementaryFn::exp, elementary(ElementaryFn::ln, two));
  CHECK(agreeing_digits(back, two) >= P.digits - 4);
}

TEST_CASE("elementary: pow") {
  const XReal r = elementary(ElementaryFn::pow, XReal(2L, P), XReal(10L, P));
  CHECK(r == 1024L);
  CHECK(agreeing_digits(pow(XReal(9L, P), XReal(0.5, P)), XReal(3L, P)) >= P.digits - 4);
  CHECK_THROWS_AS(pow(XReal(-2L, P), XReal(0.5, P)), DomainError);
}

TEST_CASE("property: exp(ln x) recovers x on [1e-50, 1e50]") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const XReal x = random_positive(rng, 50, P);
    CHECK(agreeing_digits(exp(ln(x)), x) >= P.digits - 6);
  }
}

TEST_CASE("property: doubling precision agrees to P-4 digits") {
  Rng rng(11);
  const Precision P2{128};
  for (int i = 0; i < 50; ++i) {
    const double seed = rng.unit() * 1000 + 1e-3;
    const XReal a(seed, P), b(seed, P2);
    CHECK(agreeing_digits(ln(a), ln(b)) >= P.digits - 4);
    CHECK(agreeing_digits(xprec::log10(a) / XReal(7L, P), xprec::log10(b) / XReal(7L, P2)) >=
          P.digits - 4);
    CHECK(agreeing_digits(exp(a / XReal(3L, P)), exp(b / XReal(3L, P2))) >= P.digits - 4);
    CHECK(agreeing_digits(sqrt(a), sqrt(b)) >= P.digits - 4);
  }
}

TEST_CASE("precision: results carry the operand precision") {
  const XReal a(1L, Precision{20}), b(3L, Precision{100});
  CHECK((a / b).precision().digits == 100);
  CHECK(a.with_precision(Precision{40}).precision().digits == 40);
}

TEST_CASE("parse: decimals, ratios and leading zeros") {
  CHECK(parse_rational("0.994") == mpq_class(497, 500));
  CHECK(parse_rational("0.05") == mpq_class(1, 20));
  CHECK(parse_rational("010/4") == mpq_class(5, 2));
  CHECK(parse_rational("-2.5e-3") == mpq_class(-1, 400));
  CHECK(parse_rational("1e3") == 1000);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
  CHECK(XReal::parse("1/2", P) == XReal(0.5, P));
}

TEST_CASE("log_sum_exp10: two halves make one") {
  const LogMagnitude half = LogMagnitude::from_value(XReal(0.5, P));
  const std::vector<LogMagnitude> terms{half, half};
  const LogMagnitude sum = log_sum_exp10(terms);
  CHECK(xprec::abs(sum.log10()).to_double() < 1e-60);
}

TEST_CASE("log_sum_exp10: singleton") {
  const LogMagnitude x = LogMagnitude::from_log10(XReal::parse("-1234.5678", P));
  const std::vector<LogMagnitude> terms{x};
  CHECK(log_sum_exp10(terms).log10() == x.log10());
}

TEST_CASE("log_sum_exp10: two distant terms") {
  const std::vector<LogMagnitude> terms{LogMagnitude::from_log10(XReal(-1000000L, P)),
                                        LogMagnitude::from_log10(XReal(-1000010L, P))};
  // -1e6 + log10(1 + 1e-10), frozen from an independent 80-digit evaluation.
  const XReal want =
      XReal::parse("-999999.999999999956570551811846289644258602419", Precision{80});
  CHECK(agreeing_digits(log_sum_exp10(terms).log10(), want) >= 44);
}

TEST_CASE("log_sum_exp10: zeros are skipped, empty input rejected") {
  const std::vector<LogMagnitude> zeros{LogMagnitude::zero(P), LogMagnitude::zero(P)};
  CHECK(log_sum_exp10(zeros).is_zero());
  const std::vector<LogMagnitude> mixed{LogMagnitude::zero(P),
                                        LogMagnitude::from_log10(XReal(-3L, P))};
  CHECK(log_sum_exp10(mixed).log10() == -3L);
  CHECK_THROWS_AS(log_sum_exp10(std::vector<LogMagnitude>{}), DomainError);
}

TEST_CASE("property: log_sum_exp10 is monotone under adding terms") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<LogMagnitude> terms;
    const std::size_t count = rng.between(1, 20);
    for (std::size_t i = 0; i < count; ++i)
      terms.push_back(LogMagnitude::from_log10(XReal(-rng.unit() * 1e5, P)));
    const LogMagnitude subset = log_sum_exp10(terms);
    terms.push_back(LogMagnitude::from_log10(XReal(-rng.unit() * 1e5, P)));
    CHECK(log_sum_exp10(terms).log10() >= subset.log10());
  }
}

TEST_CASE("exp_magnitude: huge negative arguments do not underflow") {
  const XReal x = -mul(ln10(P), 1'000'000'000L);
  const LogMagnitude m = exp_magnitude(x);
  CHECK_FALSE(m.is_zero());
  CHECK(agreeing_digits(m.log10(), XReal(-1'000'000'000L, P)) >= P.digits - 4);
  const auto sci = LogMagnitude::from_log10(XReal::parse("-9473.38211191876934356", P)).scientific(9);
  CHECK(sci.str() == "4.14847122e-9474");
}

TEST_CASE("no overflow: 2^12288000 is representable") {
  const XReal log10_value = mul(xprec::log10(XReal(2L, P)), 12'288'000L);
  CHECK(log10_value.to_fixed(2) == "3699056.59");
  const XReal value = exp10(log10_value);
  CHECK(agreeing_digits(xprec::log10(value), log10_value) >= P.digits - 10);
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 12'288'000);
  CHECK(xprec::log10(big, P).to_fixed(2) == "3699056.59");
}

TEST_CASE("scientific: mantissa in [1, 10) and exponent consistent with log10") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const XReal l = XReal((rng.unit() * 2 - 1) * 1e7, P);
    const auto sci = LogMagnitude::from_log10(l).scientific(9);
    const XReal m = XReal::parse(sci.mantissa, P);
    CHECK(m >= 1L);
    CHECK(m < 10L);
    const XReal recon = xprec::log10(m) + XReal(static_cast<long>(sci.exponent), P);
    CHECK(xprec::abs(recon - l).to_double() < 1e-8);
  }
  CHECK(parse_magnitude("1.24355865e-2018", P).scientific(9).str() == "1.24355865e-2018");
  CHECK(parse_magnitude("11/1024", P).scientific(9).str() == "1.07421875e-2");
  CHECK(LogMagnitude::from_log10(XReal(0L, P)).scientific(3).str() == "1.0e+0");
  CHECK(parse_magnitude("0", P).is_zero());
}

TEST_CASE("scientific: rounding carries into the exponent") {
  const auto sci = parse_magnitude("9.9999999999e-5", P).scientific(9);
  CHECK(sci.str() == "1.0e-4");
}

TEST_CASE("concurrency: fresh threads share no mutable context") {
  std::vector<std::string> out(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      out[t] = exp_magnitude(-mul(ln10(P), 5000L)).scientific(9).str();
    });
  for (auto& th : threads) th.join();
  for (const auto& s : out) CHECK(s == "1.0e-5000");
}
