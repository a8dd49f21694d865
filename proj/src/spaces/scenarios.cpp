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

#include "rarity/spaces/scenarios.hpp"

#include "rarity/binomtail/binomial.hpp"
#include "rarity/binomtail/calibrate.hpp"
#include "rarity/binomtail/reference.hpp"

namespace rarity::spaces {

namespace ref = binomtail::reference;

namespace {

// Julian year in seconds.
constexpr long kYearSeconds = 31557600;

Quantity product(std::initializer_list<Quantity> parts) {
  Quantity out = Quantity::integer(1);
  for (const auto& q : parts) out = out * q;
  return out;
}

Quantity literal(std::string_view log2_text) {
  return Quantity::from_log2(XReal::parse(log2_text, Precision{40}));
}

XReal neg_log2(const xprec::LogMagnitude& m) {
  const Precision prec = m.precision();
  return -(m.log10() / xprec::log10(XReal(2L, prec)));
}

}  // namespace

std::string_view to_string(Provenance p) {
  return p == Provenance::formula ? "computed-from-formula" : "paper-literal";
}

ScenarioInputs compute_scenario_inputs(Precision prec) {
  using binomtail::BinomialSpec;
  const auto zcr_spec =
      BinomialSpec::parse(ref::kSamplesPerSecond, ref::kZeroCrossingP, prec);
  auto bound = binomtail::chernoff(zcr_spec, ref::kZeroCrossingLimit, Direction::lower);

  const auto target = xprec::parse_magnitude(ref::kContinuityProbability, prec);
  auto cal = binomtail::calibrate_p(ref::kSamplesPerSecond, ref::kContinuityThreshold,
                                    target.log10(), ref::kCalibrationTolerance);
  return ScenarioInputs{std::move(bound), std::move(cal.achieved), std::move(cal.p)};
}

std::vector<Scenario> builtin_scenarios(Precision prec) {
  return builtin_scenarios(compute_scenario_inputs(prec));
}

std::vector<Scenario> builtin_scenarios(const ScenarioInputs& inputs) {
  std::vector<Scenario> rows;
  auto formula = [&](std::string id, std::string desc, Quantity q, std::string log2,
                     std::string order) {
    rows.push_back(Scenario{std::move(id), std::move(desc), std::move(q), Provenance::formula,
                            std::move(log2), std::move(order), std::nullopt, {}});
  };
  auto published = [&](std::string id, std::string desc, std::string log2, std::string order,
                       std::optional<Quantity> derived, std::string note) {
    Quantity q = literal(log2);
    rows.push_back(Scenario{std::move(id), std::move(desc), std::move(q),
                            Provenance::paper_literal, std::move(log2), std::move(order),
                            std::move(derived), std::move(note)});
  };

  formula("audio64", "Every 64-bit sample sequence of one second at 192 kHz",
          Quantity::power(2, 192000L * 64), "12288000", "3699057");
  formula("audio16", "Every 16-bit sample sequence of one second at 44.1 kHz",
          Quantity::power(2, 44100L * 16), "705600", "212407");
  formula("chatgpt", "Token contexts of 32768 over a 170000-word vocabulary plus blank",
          Quantity::power(170001, 32768), "569350.02", "171391");
  published("continuity", "Music-like one-second signals under the continuity criterion",
        "205703.43", "61923", Quantity::from_log2(neg_log2(inputs.continuity_tail)),
        "recomputed as -log2 of the upper tail P(X >= 43835; 44100, p*) at the calibrated p*");
  published("zcr", "Music-like one-second signals under the zero-crossing criterion", "31469.89",
        "9473", Quantity::from_log2(neg_log2(inputs.zero_crossing_bound)),
        "recomputed as -log2 of the Chernoff bound for 2205 crossings in 44100 fair trials");
  formula("orchestra", "One 4/4 bar at 240 bpm: 30 players, 32 onsets, 37 choices each",
          Quantity::power(37, 32L * 30), "5001.08", "1505");
  formula("atoms", "Atoms in the observable universe", Quantity::power(10, 80), "265.75", "80");
  published("motives", "Orbit representatives of rhythm-pitch motives over Z12 x Z12", "124.66",
        "38", std::nullopt, "only the bit count is published");
  published("humans", "One-second windows from 1024 microphones per human ever born, 80-year lives",
        "98", "30",
        product({Quantity::integer(1024), Quantity::power(10, 11), Quantity::integer(80),
                 Quantity::integer(kYearSeconds), Quantity::integer(44100)}),
        "recomputed as 1024 * 10^11 * 80 years * 44100 windows per second");
  formula("melodies", "16-step monophonic lines over two octaves plus a rest",
          Quantity::power(25, 16), "74.30", "22");
  published("universe", "Age of the universe in seconds", "58.59", "17",
        product({Quantity::integer(13787000000), Quantity::integer(kYearSeconds)}),
        "recomputed as 13.787e9 years * 31557600 s");
  published("mobiles", "One-second windows from 17 billion phones recording for 3 years", "47.42",
        "14",
        product({Quantity::integer(17), Quantity::power(10, 9), Quantity::integer(3),
                 Quantity::integer(kYearSeconds), Quantity::integer(44100)}),
        "recomputed as 17e9 phones * 3 years * 44100 windows per second");
  formula("componium", "Variations playable on the 1821 Componium",
          Quantity::integer("53875981680676"), "45.61", "13");
  published("soundcloud", "One-second windows across 200 million three-minute tracks", "39.74", "12",
        product({Quantity::integer(200), Quantity::power(10, 6), Quantity::integer(180),
                 Quantity::integer(44100)}),
        "recomputed as 2e8 tracks * 180 s * 44100 windows per second");
  formula("tonerows", "Twelve-tone rows, up to equivalence", Quantity::integer(9985920), "23.25",
          "7");
  formula("rhythms", "On/off patterns over 16 steps", Quantity::power(2, 16), "16", "5");
  // 2.5^3 m^3 haystack over a 5 cm radius grab: 15.625 / ((4/3) pi 0.05^3).
  formula("haystack", "Odds of grabbing the needle from a 2.5 m haystack",
          product({Quantity::power(5, 3), Quantity::power(2, -3), Quantity::integer(3),
                   Quantity::power(20, 3), Quantity::power(4, -1), Quantity::pi_power(-1)}),
          "14.87", "5");
  return rows;
}

const std::set<std::string>& non_recomputable_rows() {
  static const std::set<std::string> rows{"continuity", "humans", "mobiles", "soundcloud"};
  return rows;
}

XReal daw_space_log10(const DawSpaceSpec& spec, Precision prec) {
  if (spec.n < 1 || spec.m < 1 || spec.y < 1)
    throw DomainError("N, M and Y must be at least 1");
  if (spec.x == 0) return XReal(prec);
  auto big = [](std::uint64_t v) { return mpz_class(std::to_string(v), 10); };
  const mpz_class inner = big(spec.y + 1) * big(kParameterLevels) * big(spec.m) * big(spec.n);
  const Precision work = prec.plus(10);
  XReal per_step = xprec::log10(inner, work);
  return mul(per_step, spec.x).with_precision(prec);
}

}  // namespace rarity::spaces
