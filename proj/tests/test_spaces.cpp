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

#include <cmath>
#include <set>
#include <string>

#include "rarity/spaces/quantity.hpp"
#include "rarity/spaces/scenarios.hpp"
#include "rarity/spaces/table.hpp"
#include "support/oracle.hpp"

using namespace rarity;
using namespace rarity::spaces;
using rarity::testing::agreeing_digits;
using rarity::testing::Rng;

namespace {
const Precision P{40};

XReal frozen(const char* text) { return XReal::parse(text, Precision{80}); }

const std::vector<Scenario>& registry() {
  static const std::vector<Scenario> rows = builtin_scenarios();
  return rows;
}

const Scenario& scenario(const std::string& id) {
  for (const auto& s : registry())
    if (s.id == id) return s;
  FAIL("missing scenario " << id);
  throw;
}

double log2_of(const std::string& id) {
  return quantity_log(scenario(id).quantity, LogBase::two, P).to_double();
}
}  // namespace

TEST_CASE("quantity_log: small exact cases") {
  CHECK(quantity_log(Quantity::power(2, 16), LogBase::two, P) == 16L);
  CHECK(quantity_log(Quantity::power(10, 80), LogBase::ten, P) == 80L);
  CHECK(quantity_log(Quantity::integer("1"), LogBase::ten, P).is_zero());
  CHECK(quantity_log(Quantity::power(2, 3) * Quantity::power(2, -3), LogBase::two, P).is_zero());
  CHECK(agreeing_digits(quantity_log(Quantity::pi_power(1), LogBase::ten, P),
                        xprec::log10(xprec::pi(P))) >= 38);
  CHECK(quantity_log(Quantity::from_log2(XReal(10L, P)), LogBase::two, P) == 10L);
  CHECK(quantity_log(Quantity::integer("0123"), LogBase::ten, P) ==
        quantity_log(Quantity::integer(123), LogBase::ten, P));
  CHECK_THROWS_AS(Quantity::integer("0"), DomainError);
  CHECK_THROWS_AS(Quantity::power(1, 3), DomainError);
  CHECK_THROWS_AS(Quantity::from_log2(XReal(1L, P)) * Quantity::power(2, 1), DomainError);
}

TEST_CASE("property: log2 and log10 differ by the factor log10(2)") {
  Rng rng(61);
  const XReal log10_2 = xprec::log10(XReal(2L, P));
  for (int i = 0; i < 100; ++i) {
    const Quantity q = Quantity::power(rng.between(2, 1000000), static_cast<std::int64_t>(rng.between(1, 100000))) *
                       Quantity::integer(rng.between(1, 1000000000));
    const XReal l2 = quantity_log(q, LogBase::two, P);
    const XReal l10 = quantity_log(q, LogBase::ten, P);
    CHECK(xprec::abs(l2 * log10_2 - l10).to_double() <= 1e-10 * l10.to_double());
  }
}

TEST_CASE("property: materialized integers agree with the log path") {
  Rng rng(67);
  for (int i = 0; i < 50; ++i) {
    const Quantity q = Quantity::power(rng.between(2, 50), static_cast<std::int64_t>(rng.between(1, 3000))) *
                       Quantity::power(rng.between(2, 50), static_cast<std::int64_t>(rng.between(0, 300)));
    const auto exact = q.materialize();
    REQUIRE(exact.has_value());
    const XReal direct = xprec::log10(*exact, P);
    CHECK(xprec::abs(direct - quantity_log(q, LogBase::ten, P)).to_double() <= 1e-9);
  }
  CHECK_FALSE(Quantity::pi_power(1).materialize().has_value());
  CHECK_FALSE(Quantity::power(2, -1).materialize().has_value());
  CHECK_FALSE(Quantity::power(2, 192000L * 64).materialize(1000).has_value());
  CHECK(*(Quantity::power(4, 2) * Quantity::power(2, -3)).materialize() == 2);
}

TEST_CASE("registry: formula rows reproduce their published bit counts") {
  for (const auto& s : registry()) {
    if (s.provenance != Provenance::formula) continue;
    CAPTURE(s.id);
    const double published = std::stod(s.published_log2);
    CHECK(std::abs(log2_of(s.id) - published) <= 0.01 * std::max(1.0, published * 1e-6));
  }
  CHECK(registry().size() == 17);
}

TEST_CASE("registry: frozen magnitudes") {
  auto l2 = [](const std::string& id) { return quantity_log(scenario(id).quantity, LogBase::two, P); };
  CHECK(agreeing_digits(l2("chatgpt"), frozen("569350.019718061941381708212707")) >= 30);
  CHECK(agreeing_digits(l2("orchestra"), frozen("5001.07523100379179058349201051")) >= 30);
  CHECK(agreeing_digits(l2("componium"), frozen("45.61470748549503237245540079")) >= 27);
  CHECK(agreeing_digits(l2("haystack"), frozen("14.8650349405730114706323762258")) >= 29);
  CHECK(agreeing_digits(quantity_log(scenario("audio16").quantity, LogBase::ten, P),
                        frozen("212406.764940505131342814164118")) >= 28);
  const XReal ratio = xprec::exp10(quantity_log(scenario("haystack").quantity, LogBase::ten, P));
  CHECK(agreeing_digits(ratio, frozen("29841.5518297303754566657056323")) >= 28);
  CHECK(quantity_log(scenario("rhythms").quantity, LogBase::two, P) == 16L);
  CHECK(scenario("audio64").quantity.materialize(1000) == std::nullopt);
}

TEST_CASE("registry: literal rows keep the published bits and a recomputation") {
  for (const auto& id : {"continuity", "zcr", "humans", "universe", "mobiles", "soundcloud"}) {
    CAPTURE(id);
    const auto& s = scenario(id);
    CHECK(s.provenance == Provenance::paper_literal);
    CHECK(s.derived.has_value());
    CHECK(s.quantity.is_log_literal());
    CHECK(log2_of(id) == doctest::Approx(std::stod(s.published_log2)));
  }
  CHECK_FALSE(scenario("motives").derived.has_value());
  const double zcr = quantity_log(*scenario("zcr").derived, LogBase::two, P).to_double();
  CHECK(std::abs(zcr - 31469.89) < 0.01);
  const double continuity =
      quantity_log(*scenario("continuity").derived, LogBase::two, P).to_double();
  CHECK(std::abs(continuity - 6703.34) < 0.01);
}

TEST_CASE("daw space") {
  CHECK(agreeing_digits(daw_space_log10({96, 100, 100, 99}),
                        frozen("980.5843141723907263672650745097186279764")) >= 38);
  CHECK(agreeing_digits(daw_space_log10({2048, 1000000, 100, 249}),
                        frozen("29926.11317343800185357284707674914062586")) >= 38);
  CHECK(daw_space_log10({0, 100, 100, 99}).is_zero());
  CHECK_THROWS_AS(daw_space_log10({5, 0, 100, 99}), DomainError);
  CHECK_THROWS_AS(daw_space_log10({5, 100, 0, 99}), DomainError);
  CHECK_THROWS_AS(daw_space_log10({5, 100, 100, 0}), DomainError);

  Rng rng(71);
  for (int i = 0; i < 50; ++i) {
    const DawSpaceSpec s{rng.between(1, 5000), rng.between(1, 1000000), rng.between(1, 1000),
                         rng.between(1, 1000)};
    const XReal base = daw_space_log10(s);
    const XReal twice = daw_space_log10({2 * s.x, s.n, s.m, s.y});
    CHECK(xprec::abs(twice - mul(base, 2L)).to_double() <= 1e-25 * twice.to_double());
    CHECK(daw_space_log10({s.x, s.n + 1, s.m, s.y}) > base);
    CHECK(daw_space_log10({s.x, s.n, s.m + 1, s.y}) > base);
    CHECK(daw_space_log10({s.x, s.n, s.m, s.y + 1}) > base);
  }
}

TEST_CASE("table: ordering, mismatches and notes") {
  const auto rows = table_rows(registry());
  REQUIRE(rows.size() == 17);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].log2 >= rows[i].log2);
  CHECK(rows.front().id == "audio64");
  CHECK(rows.back().id == "haystack");

  std::set<std::string> mismatched;
  for (const auto& r : rows)
    if (r.mismatch) mismatched.insert(r.id);
  CHECK(mismatched == non_recomputable_rows());

  for (const auto& r : rows) {
    if (r.id != "componium") continue;
    bool noted = false;
    for (const auto& n : r.notes) noted |= n.find("13.73") != std::string::npos;
    CHECK(noted);
  }
}

TEST_CASE("table: rendered formats") {
  const std::string csv = render_table(registry(), TableFormat::csv);
  CHECK(csv.rfind("id,description,log2,log10,paper_order,provenance,mismatch\n", 0) == 0);
  CHECK(csv.find("rhythms,On/off patterns over 16 steps,16.00,4.82,5,computed-from-formula,no") !=
        std::string::npos);
  CHECK(csv.find("humans,") != std::string::npos);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  CHECK(lines == 18);

  const std::string md = render_table(registry(), TableFormat::markdown);
  std::size_t markers = 0;
  for (auto pos = md.find("MISMATCH"); pos != std::string::npos; pos = md.find("MISMATCH", pos + 1))
    ++markers;
  CHECK(markers == non_recomputable_rows().size());
  CHECK(md.find("[^1]") != std::string::npos);

  const std::string plain = render_table(registry(), TableFormat::plain);
  CHECK(plain.find("Notes:") != std::string::npos);

  CHECK(parse_table_format("csv") == TableFormat::csv);
  CHECK_THROWS_AS(parse_table_format("xml"), std::invalid_argument);
  CHECK_THROWS_AS(render_table({}, TableFormat::csv), DomainError);
}
