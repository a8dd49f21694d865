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

#include "rarity/cli/report.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "rarity/audiostats/noise.hpp"
#include "rarity/audiostats/stats.hpp"
#include "rarity/binomtail/binomial.hpp"
#include "rarity/binomtail/calibrate.hpp"
#include "rarity/binomtail/reference.hpp"
#include "rarity/binomtail/sweep.hpp"
#include "rarity/cli/emit.hpp"
#include "rarity/cli/format.hpp"
#include "rarity/spaces/scenarios.hpp"
#include "rarity/spaces/table.hpp"

namespace rarity::cli {

namespace fs = std::filesystem;
namespace ref = binomtail::reference;
using json = nlohmann::ordered_json;

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

namespace {

struct Output {
  std::string file;
  std::string content;
};

HeadlineValue magnitude_value(std::string name, const LogMagnitude& m, std::string provenance,
                              std::string note) {
  return {std::move(name), format_magnitude(m), format_log10(m), std::move(provenance),
          std::move(note)};
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

json manifest_json(const std::string& stamp_text, const ReportConfig& config,
                   const ReportBundle& bundle) {
  json doc;
  doc["generator"] = stamp_text;
  doc["version"] = std::string(kVersion);
  doc["precision"] = config.precision;
  doc["seed"] = config.seed;
  doc["prng"] = std::string(audiostats::kNoiseEngineName);
  json values = json::array();
  for (const auto& v : bundle.values) {
    json row;
    row["name"] = v.name;
    row["value"] = v.value;
    row["log10"] = v.log10.empty() ? json(nullptr) : json(v.log10);
    row["provenance"] = v.provenance;
    row["note"] = v.note;
    values.push_back(std::move(row));
  }
  doc["values"] = std::move(values);
  doc["discrepancies"] = bundle.discrepancies;
  json artifacts = json::array();
  for (const auto& a : bundle.artifacts) artifacts.push_back({{"file", a.file}, {"sha256", a.sha256}});
  doc["artifacts"] = std::move(artifacts);
  return doc;
}

void publish(const std::vector<Output>& outputs, const fs::path& out_dir) {
  const fs::path target = fs::absolute(out_dir).lexically_normal();
  const fs::path parent = target.parent_path();
  fs::create_directories(parent);
  const fs::path staging = parent / ("." + target.filename().string() + ".staging");
  fs::remove_all(staging);
  try {
    fs::create_directory(staging);
    for (const auto& o : outputs) write_text_file(staging / o.file, o.content);
    fs::create_directories(target);
    for (const auto& o : outputs) fs::rename(staging / o.file, target / o.file);
    fs::remove_all(staging);
  } catch (...) {
    std::error_code ignored;
    fs::remove_all(staging, ignored);
    throw;
  }
}

}  // namespace

ReportBundle write_report(const ReportConfig& config) {
  if (config.out_dir.empty()) throw std::invalid_argument("report needs an output directory");
  if (config.precision < kMinPrecision)
    throw std::invalid_argument("precision must be at least " + std::to_string(kMinPrecision));
  const Precision prec{config.precision};
  const std::string stamp_text = stamp(config.precision, config.seed);
  ReportBundle bundle;
  bundle.dir = config.out_dir;
  auto& values = bundle.values;

  // Zero-crossing bound.
  const auto zcr_spec =
      binomtail::BinomialSpec::parse(ref::kSamplesPerSecond, ref::kZeroCrossingP, prec);
  const auto bound = binomtail::chernoff(zcr_spec, ref::kZeroCrossingLimit, Direction::lower);
  values.push_back(magnitude_value(
      "chernoff_zero_crossings", bound, "paper",
      "Chernoff bound on P(X <= 2205) for n = 44100, p = 1/2; published to 8 digits as " +
          std::string(ref::kChernoffBound)));

  // Continuity: published figure, calibrated p*, and the epsilon model.
  const auto published = xprec::parse_magnitude(ref::kContinuityProbability, prec);
  values.push_back(magnitude_value("continuity_probability_published", published, "paper",
                                   "P(X >= 43835) for n = 44100 as published"));
  const auto cal = binomtail::calibrate_p(ref::kSamplesPerSecond, ref::kContinuityThreshold,
                                          published.log10(), ref::kCalibrationTolerance);
  values.push_back({"calibrated_p", format_significant(cal.p, 20), "", "calibrated",
                    "p solving log10 P(X >= 43835; 44100, p) = log10 1.24355865e-2018; residual " +
                        fixed(cal.residual, 12) + " after " + std::to_string(cal.iterations) +
                        " bisection steps"});
  values.push_back(magnitude_value("continuity_tail_at_calibrated_p", cal.achieved, "calibrated",
                                   "P(X >= 43835; 44100, p*)"));
  const binomtail::TailQuery eps_query(
      binomtail::BinomialSpec::parse(ref::kSamplesPerSecond, ref::kEpsilonModelP, prec),
      ref::kContinuityThreshold, Direction::upper);
  const auto eps_tail = binomtail::tail(eps_query);
  values.push_back(magnitude_value("continuity_tail_at_epsilon_model", eps_tail, "derived",
                                   "P(X >= 43835; 44100, 1/10), the stated proximity model"));

  // Figures: one sweep over 2..44100 at p*, the second figure is its prefix.
  binomtail::SweepConfig sweep_config;
  sweep_config.n_min = 2;
  sweep_config.n_max = ref::kFigureOneMax;
  sweep_config.threshold_ratio = xprec::parse_rational(ref::kContinuityRatio);
  sweep_config.p = cal.p;
  sweep_config.workers = config.workers;
  const auto fig1 = binomtail::sweep(sweep_config, Direction::upper);
  binomtail::SweepSeries fig2;
  for (const auto& pt : fig1.points)
    if (pt.n <= ref::kFigureTwoMax) fig2.points.push_back(pt);

  const XReal threshold(static_cast<long>(ref::kCrossoverLog10), prec);
  const auto cross = binomtail::crossover(fig2, threshold);
  values.push_back({"crossover_n", cross ? std::to_string(*cross) : "none", "", "calibrated",
                    "first n with log10 P(X >= floor(0.994 n)) < -80 at p*; published as "
                    "around " + std::to_string(ref::kCrossoverApprox)});
  const auto fit = binomtail::fit_line(fig1);
  values.push_back({"fig1_slope", format_double(fit.slope), "", "derived",
                    "least-squares slope of log10 P against n over 2..44100"});
  values.push_back({"fig1_r_squared", fixed(fit.r_squared, 10), "", "derived",
                    "coefficient of determination of that fit"});

  // Design-space formula.
  const XReal daw_small = spaces::daw_space_log10({96, 100, 100, 99}, Precision{40});
  values.push_back({"daw_space_x96_n100_m100_y99", format_significant(daw_small, 17),
                    format_significant(daw_small, 17), "paper", "log10 of ((Y+1) 16384 M N)^X"});
  const XReal daw_large = spaces::daw_space_log10({2048, 1000000, 100, 249}, Precision{40});
  const XReal daw_large_published = XReal::parse("31974.113173438", Precision{40});
  values.push_back({"daw_space_x2048_n1e6_m100_y249", format_significant(daw_large, 17),
                    format_significant(daw_large, 17), "derived", "direct evaluation"});
  values.push_back({"daw_space_x2048_n1e6_m100_y249_published", "31974.113173438",
                    "31974.113173438", "paper", "as published"});
  const XReal daw_large_gap = daw_large_published - daw_large;
  values.push_back({"daw_space_x2048_published_minus_direct", format_significant(daw_large_gap, 10), "",
                    "derived", "equals X log10(10), the effect of M = 1000"});

  // White noise and Monte Carlo.
  const auto noise = audiostats::white_noise(1'000'000, config.seed);
  const auto noise_stats = audiostats::signal_stats(noise, config.epsilon);
  values.push_back({"white_noise_zcr", fixed(noise_stats.zcr, 6), "", "derived",
                    "10^6 uniform samples on [-1, 1]; expectation 0.5"});
  values.push_back({"white_noise_proximity", fixed(noise_stats.proximity_rate, 6), "", "derived",
                    "epsilon " + format_double(config.epsilon) + "; expectation eps - eps^2/4 = " +
                        fixed(audiostats::white_noise_proximity(config.epsilon), 6)});
  if (config.trials > 0) {
    const auto mc = audiostats::monte_carlo_tail(10, 9, 0.5, Direction::upper, config.trials,
                                                 config.seed, config.workers);
    values.push_back({"montecarlo_n10_K9_p0.5", fixed(mc.estimate, 8), "", "derived",
                      std::to_string(mc.successes) + " of " + std::to_string(mc.trials) +
                          " trials; 95% Wilson interval [" + fixed(mc.ci_low, 8) + ", " +
                          fixed(mc.ci_high, 8) + "]; exact 11/1024 = 0.01074219"});
  }

  // Comparative sizes.
  const auto registry = spaces::builtin_scenarios(spaces::ScenarioInputs{bound, cal.achieved, cal.p});
  std::string mismatch_note =
      "table_rows: these rows do not recompute from their stated parameters and are kept as "
      "published, marked as mismatches:";
  for (const auto& row : spaces::table_rows(registry)) {
    std::string note = row.description;
    if (row.mismatch) {
      note += "; recomputation gives log2 " + row.recomputed_log2->to_fixed(2);
      mismatch_note += " " + row.id + " (published log2 " + row.log2.to_fixed(2) +
                       ", recomputed " + row.recomputed_log2->to_fixed(2) + ")";
    }
    values.push_back({"size_" + row.id + "_log2", row.log2.to_fixed(2), row.log10.to_fixed(2),
                      row.provenance == spaces::Provenance::formula ? "derived" : "paper", note});
  }

  bundle.discrepancies = {
      "flagship_p: the stated proximity model (p = 1/10) gives log10 P(X >= 43835; 44100) = " +
          format_log10(eps_tail, 12) + ", not the published log10 " +
          format_log10(published, 12) + ". The published figure is reproduced only at p* = " +
          format_significant(cal.p, 12) + ", recovered here by calibration.",
      "daw_space: direct evaluation at X = 2048, N = 10^6, M = 100, Y = 249 gives " +
          format_significant(daw_large, 14) + "; the published 31974.113173438 exceeds it by " +
          format_significant(daw_large_gap, 10) + ", which matches M = 1000. Both values are reported.",
      mismatch_note + "."};

  std::vector<Output> outputs;
  PlotOptions fig1_opts{"log10 P(X >= floor(0.994 n)) for n = 2..44100", stamp_text, -80.0};
  PlotOptions fig2_opts{"log10 P(X >= floor(0.994 n)) for n = 2..2000", stamp_text, -80.0};
  outputs.push_back({"fig1.csv", sweep_csv(fig1)});
  outputs.push_back({"fig1.svg", sweep_svg(fig1, fig1_opts)});
  outputs.push_back({"fig2.csv", sweep_csv(fig2)});
  outputs.push_back({"fig2.svg", sweep_svg(fig2, fig2_opts)});
  outputs.push_back({"table1.md", spaces::render_table(registry, spaces::TableFormat::markdown)});
  outputs.push_back({"table1.csv", spaces::render_table(registry, spaces::TableFormat::csv)});

  if (!config.corpus.empty()) {
    const auto paths = audiostats::expand_inputs(config.corpus);
    const auto summary = audiostats::corpus_summary(paths, config.epsilon, config.workers);
    std::ostringstream csv;
    audiostats::write_corpus_csv(csv, summary);
    outputs.push_back({"corpus.csv", csv.str()});
    std::string skipped;
    for (const auto& s : summary.skipped) skipped += "; skipped " + s.path + ": " + s.reason;
    values.push_back({"corpus_zcr", fixed(summary.pooled.zcr, 6), "", "derived",
                      std::to_string(summary.files.size()) +
                          " files pooled by pair count; recordings are expected near 0.05" +
                          skipped});
    values.push_back({"corpus_proximity", fixed(summary.pooled.proximity_rate, 6), "", "derived",
                      "epsilon " + format_double(config.epsilon) +
                          "; recordings are expected near 0.997"});
  }

  for (const auto& o : outputs) bundle.artifacts.push_back({o.file, sha256_hex(o.content)});
  outputs.push_back({"manifest.json", manifest_json(stamp_text, config, bundle).dump(2) + "\n"});
  publish(outputs, config.out_dir);
  return bundle;
}

}  // namespace rarity::cli
