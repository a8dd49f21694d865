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
#include <cstring>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include "rarity/audiostats/audio.hpp"
#include "rarity/audiostats/noise.hpp"
#include "rarity/audiostats/stats.hpp"
#include "rarity/binomtail/exact.hpp"
#include "support/oracle.hpp"

using namespace rarity;
using namespace rarity::audiostats;
namespace fs = std::filesystem;

namespace {
AudioBuffer buffer(std::vector<double> x) { return AudioBuffer(std::move(x), 44100.0); }

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("rarity_audiostats_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void put_u16(std::vector<std::uint8_t>& b, std::uint16_t v) {
  b.push_back(v & 0xff);
  b.push_back(v >> 8);
}
void put_u32(std::vector<std::uint8_t>& b, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) b.push_back((v >> (8 * i)) & 0xff);
}
void put_tag(std::vector<std::uint8_t>& b, const char* tag) { b.insert(b.end(), tag, tag + 4); }

// Hand-assembled RIFF file with the given format chunk fields and raw data.
std::vector<std::uint8_t> riff(std::uint16_t format, std::uint16_t channels, std::uint16_t bits,
                               const std::vector<std::uint8_t>& data) {
  std::vector<std::uint8_t> b;
  put_tag(b, "RIFF");
  put_u32(b, static_cast<std::uint32_t>(36 + data.size()));
  put_tag(b, "WAVE");
  put_tag(b, "fmt ");
  put_u32(b, 16);
  put_u16(b, format);
  put_u16(b, channels);
  put_u32(b, 8000);
  put_u32(b, 8000u * channels * bits / 8);
  put_u16(b, static_cast<std::uint16_t>(channels * bits / 8));
  put_u16(b, bits);
  put_tag(b, "data");
  put_u32(b, static_cast<std::uint32_t>(data.size()));
  b.insert(b.end(), data.begin(), data.end());
  return b;
}
}  // namespace

TEST_CASE("zcr: constant, alternating and sine signals") {
  CHECK(zero_crossing_rate(buffer(std::vector<double>(100, 0.3))) == 0.0);
  CHECK(zero_crossing_rate(buffer(std::vector<double>(100, 0.0))) == 0.0);
  std::vector<double> alt(101);
  for (std::size_t i = 0; i < alt.size(); ++i) alt[i] = i % 2 ? -0.5 : 0.5;
  CHECK(zero_crossing_rate(buffer(alt)) == 1.0);

  // 441 Hz for one second: 882 crossings over 44099 pairs.
  std::vector<double> sine(44100);
  for (std::size_t i = 0; i < sine.size(); ++i)
    sine[i] = std::sin(2 * std::numbers::pi * 441.0 * (static_cast<double>(i) + 0.5) / 44100.0);
  CHECK(zero_crossing_rate(buffer(sine)) == doctest::Approx(882.0 / 44099.0).epsilon(1e-3));
  CHECK_THROWS_AS(zero_crossing_rate(buffer({0.1})), std::domain_error);
}

TEST_CASE("proximity: staircase and strict inequality") {
  std::vector<double> stairs;
  for (int i = 0; i < 11; ++i) stairs.push_back(-1.0 + 0.2 * i);
  CHECK(proximity_rate(buffer(stairs), 0.25) == 1.0);
  CHECK(proximity_rate(buffer(stairs), 0.1) == 0.0);
  CHECK(proximity_rate(buffer({0.0, 0.5, 0.5, 0.0}), 0.5) == doctest::Approx(1.0 / 3.0));
  CHECK(white_noise_proximity(0.1) == doctest::Approx(0.0975));
}

TEST_CASE("property: rates are invariant under reversal and scaling") {
  testing::Rng rng(41);
  for (int t = 0; t < 20; ++t) {
    std::vector<double> x(200);
    for (auto& v : x) v = rng.unit() * 2 - 1;
    std::vector<double> rev(x.rbegin(), x.rend());
    std::vector<double> scaled(x);
    for (auto& v : scaled) v *= 0.25;
    CHECK(zero_crossing_rate(buffer(x)) == zero_crossing_rate(buffer(rev)));
    CHECK(proximity_rate(buffer(x), 0.3) == proximity_rate(buffer(rev), 0.3));
    CHECK(zero_crossing_rate(buffer(x)) == zero_crossing_rate(buffer(scaled)));
    CHECK(proximity_rate(buffer(x), 0.4) == proximity_rate(buffer(scaled), 0.1));
  }
}

TEST_CASE("white noise: rates match their expectations") {
  const auto noise = white_noise(1'000'000, 42);
  CHECK(noise.size() == 1'000'000);
  for (double v : noise.samples()) {
    REQUIRE(v >= -1.0);
    REQUIRE(v < 1.0);
  }
  const auto s = signal_stats(noise, 0.1);
  CHECK(std::abs(s.zcr - 0.5) < 0.005);
  CHECK(std::abs(s.proximity_rate - white_noise_proximity(0.1)) < 0.005);
  CHECK(white_noise(1000, 7).samples()[999] == white_noise(1000, 7).samples()[999]);
  CHECK(white_noise(1000, 7).samples()[0] != white_noise(1000, 8).samples()[0]);
}

TEST_CASE("engine: output sequence is the standard one") {
  NoiseEngine engine;
  std::uint64_t v = 0;
  for (int i = 0; i < 10000; ++i) v = engine();
  CHECK(v == 9981545732273789042ULL);
}

TEST_CASE("wav: round trip stays within one quantization step") {
  const fs::path dir = scratch_dir("roundtrip");
  testing::Rng rng(43);
  std::vector<double> x(5000);
  for (auto& v : x) v = rng.unit() * 2 - 1;
  x[0] = 1.0;
  x[1] = -1.0;
  write_wav(buffer(x), dir / "a.wav");
  const auto back = load_wav(dir / "a.wav");
  REQUIRE(back.size() == x.size());
  CHECK(back.sample_rate() == 44100.0);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(std::abs(back.samples()[i] - x[i]) <= 1.0 / 32768);
  CHECK(back.samples()[0] == 32767.0 / 32768.0);
  CHECK(back.samples()[1] == -1.0);
  fs::remove_all(dir);
}

TEST_CASE("wav: hand-built files decode") {
  std::vector<std::uint8_t> pcm16;
  put_u16(pcm16, 32767);
  put_u16(pcm16, 0x8000);
  const auto a = parse_wav(riff(1, 1, 16, pcm16));
  REQUIRE(a.size() == 2);
  CHECK(a.samples()[0] == 32767.0 / 32768.0);
  CHECK(a.samples()[1] == -1.0);
  CHECK(a.sample_rate() == 8000.0);

  // Stereo frames are averaged.
  std::vector<std::uint8_t> stereo;
  put_u16(stereo, 16384);
  put_u16(stereo, 0);
  const auto s = parse_wav(riff(1, 2, 16, stereo));
  REQUIRE(s.size() == 1);
  CHECK(s.samples()[0] == 0.25);

  std::vector<std::uint8_t> pcm24{0x00, 0x00, 0x40};
  CHECK(parse_wav(riff(1, 1, 24, pcm24)).samples()[0] == 0.5);

  std::vector<std::uint8_t> f32;
  const float values[] = {0.75f, 2.0f};
  for (float f : values) {
    std::uint32_t bits;
    std::memcpy(&bits, &f, 4);
    put_u32(f32, bits);
  }
  const auto fl = parse_wav(riff(3, 1, 32, f32));
  CHECK(fl.samples()[0] == 0.75);
  CHECK(fl.samples()[1] == 1.0);
}

TEST_CASE("wav: malformed input is rejected") {
  std::vector<std::uint8_t> junk{'n', 'o', 'p', 'e'};
  CHECK_THROWS_AS(parse_wav(junk), FormatError);
  auto truncated = riff(1, 1, 16, {0, 0, 0, 0});
  truncated.resize(30);
  CHECK_THROWS_AS(parse_wav(truncated), FormatError);
  CHECK_THROWS_AS(parse_wav(riff(2, 1, 16, {0, 0})), FormatError);
  CHECK_THROWS_AS(parse_wav(riff(1, 1, 12, {0, 0})), FormatError);
  CHECK_THROWS(load_wav("/nonexistent/rarity.wav"));
}

TEST_CASE("corpus: pooling weights files by pair count and skips bad files") {
  const fs::path dir = scratch_dir("corpus");
  write_wav(buffer({0.5, -0.5, 0.5, -0.5, 0.5}), dir / "a.wav");
  write_wav(buffer({0.1, 0.1, 0.1}), dir / "b.wav");
  std::ofstream(dir / "c.wav") << "not audio";
  const auto inputs = expand_inputs({(dir / "*.wav").string()});
  REQUIRE(inputs.size() == 3);
  const auto summary = corpus_summary(inputs, 0.1);
  REQUIRE(summary.files.size() == 2);
  REQUIRE(summary.skipped.size() == 1);
  CHECK(summary.pooled.pair_count == 6);
  CHECK(summary.pooled.zcr == doctest::Approx(4.0 / 6.0));
  CHECK(summary.pooled.proximity_rate == doctest::Approx(2.0 / 6.0));
  std::ostringstream csv;
  write_corpus_csv(csv, summary);
  CHECK(csv.str().rfind("file,samples,sample_rate,zcr,proximity_rate,epsilon\n", 0) == 0);
  CHECK_THROWS_AS(corpus_summary({(dir / "c.wav").string()}, 0.1), std::runtime_error);
  fs::remove_all(dir);
}

TEST_CASE("wilson interval") {
  const auto w = wilson_interval(50, 100);
  CHECK(w.low == doctest::Approx(0.40383153).epsilon(1e-6));
  CHECK(w.high == doctest::Approx(0.59616847).epsilon(1e-6));
  const auto zero = wilson_interval(0, 1000);
  CHECK(zero.low == 0.0);
  CHECK(zero.high > 0.0);
}

TEST_CASE("monte carlo: determinism and closed forms") {
  const auto a = monte_carlo_tail(10, 9, 0.5, Direction::upper, 200000, 42, 1);
  const auto b = monte_carlo_tail(10, 9, 0.5, Direction::upper, 200000, 42, 3);
  CHECK(a.successes == b.successes);
  CHECK(a.ci_low <= 11.0 / 1024);
  CHECK(11.0 / 1024 <= a.ci_high);
  CHECK(monte_carlo_tail(10, 0, 0.3, Direction::upper, 1000, 1).estimate == 1.0);
  const auto all = monte_carlo_tail(4, 4, 0.5, Direction::upper, 200000, 5);
  CHECK(std::abs(all.estimate - 1.0 / 16) < 4 * std::sqrt(1.0 / 16 * 15.0 / 16 / 200000));
}

TEST_CASE("monte carlo: agrees with the exact tail within four standard errors") {
  struct Case {
    unsigned n, K;
    int p_num, p_den;
    Direction d;
  };
  const Case cases[] = {{10, 9, 1, 2, Direction::upper}, {20, 3, 3, 10, Direction::lower},
                        {30, 20, 3, 5, Direction::upper}, {15, 2, 1, 4, Direction::lower},
                        {40, 30, 7, 10, Direction::upper}};
  const std::uint64_t trials = 100000;
  for (const auto& c : cases) {
    const mpq_class p(c.p_num, c.p_den);
    const binomtail::TailQuery q(binomtail::BinomialSpec(c.n, p, xprec::Precision{40}), c.K, c.d);
    const double exact = binomtail::tail_exact(q).value.get_d();
    const auto mc = monte_carlo_tail(c.n, c.K, p.get_d(), c.d, trials, 1234);
    const double se = std::sqrt(exact * (1 - exact) / trials);
    CAPTURE(c.n);
    CHECK(std::abs(mc.estimate - exact) <= 4 * se);
  }
}
