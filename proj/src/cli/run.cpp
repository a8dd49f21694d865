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

#include "rarity/cli/run.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "rarity/audiostats/noise.hpp"
#include "rarity/audiostats/stats.hpp"
#include "rarity/binomtail/binomial.hpp"
#include "rarity/binomtail/calibrate.hpp"
#include "rarity/binomtail/exact.hpp"
#include "rarity/binomtail/reference.hpp"
#include "rarity/binomtail/sweep.hpp"
#include "rarity/cli/emit.hpp"
#include "rarity/cli/format.hpp"
#include "rarity/cli/report.hpp"
#include "rarity/parallel.hpp"
#include "rarity/spaces/scenarios.hpp"
#include "rarity/spaces/table.hpp"

namespace rarity::cli {

namespace {

namespace ref = binomtail::reference;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string trim(std::string s) {
  auto space = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), space));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), space).base(), s.end());
  return s;
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Appends "--key=value" for every key = value line of the --config file whose
// flag is not already on the command line.
std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");

  std::set<std::string> given;
  for (const auto& a : args)
    if (a.rfind("--", 0) == 0) given.insert(lower(a.substr(2, a.find('=') - 2)));

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(path + ":" + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    if (key.empty() || key == "config" || given.count(lower(key))) continue;
    args.push_back("--" + key + "=" + value);
  }
  return args;
}

void kv(std::ostream& out, std::string_view key, std::string_view value) {
  out << key << ": " << value << '\n';
}

struct Globals {
  int precision = kDefaultPrecision;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = default_workers();
  int digits = kDefaultDigits;
  std::string config;
};

XReal calibrated_p(Precision prec) {
  const auto target = xprec::parse_magnitude(ref::kContinuityProbability, prec);
  return binomtail::calibrate_p(ref::kSamplesPerSecond, ref::kContinuityThreshold,
                                target.log10(), ref::kCalibrationTolerance)
      .p;
}

XReal resolve_p(const std::string& text, Precision prec) {
  if (text == "calibrated") return calibrated_p(prec);
  return XReal::from_rational(xprec::parse_rational(text), prec);
}

void print_magnitude(std::ostream& out, std::string_view key, const LogMagnitude& m,
                     int digits) {
  kv(out, key, format_magnitude(m, digits));
  kv(out, "log10", format_log10(m, std::max(17, digits + 8)));
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rarity of music-like signals: extreme binomial tails, audio statistics and "
               "sizes of musical spaces",
               "rarity"};
  app.failure_message(CLI::FailureMessage::help);
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));

  Globals g;
  app.add_option("--precision", g.precision,
                 "working precision in decimal digits (default: $RARITY_PRECISION or 64)")
      ->check(CLI::Range(kMinPrecision, 1'000'000))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--workers", g.workers, "worker threads; never changes any output")
      ->check(CLI::Range(1u, 4096u))
      ->capture_default_str();
  app.add_option("--digits", g.digits, "significant digits of printed mantissas")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  app.add_option("--config", g.config, "file of key = value lines, keys named like long flags");

  auto direction_check = CLI::IsMember({"upper", "lower"});

  // tail
  std::uint64_t t_n = 0, t_k = 0;
  std::string t_p, t_dir = "upper";
  bool t_exact = false;
  auto* tail_cmd = app.add_subcommand("tail", "binomial tail P(X >= K) or P(X <= K)");
  tail_cmd->add_option("--n", t_n, "trials")->required();
  tail_cmd->add_option("--K,--k", t_k, "threshold")->required();
  tail_cmd->add_option("--p", t_p, "per-trial probability, decimal or a/b")->required();
  tail_cmd->add_option("--direction", t_dir)->check(direction_check)->capture_default_str();
  tail_cmd->add_flag("--exact", t_exact, "exact rational evaluation");

  // chernoff
  std::uint64_t c_n = 0, c_k = 0;
  std::string c_p, c_dir = "lower";
  auto* chernoff_cmd = app.add_subcommand("chernoff", "Chernoff bound exp(-n D(k/n || p))");
  chernoff_cmd->add_option("--n", c_n, "trials")->required();
  chernoff_cmd->add_option("--k,--K", c_k, "threshold")->required();
  chernoff_cmd->add_option("--p", c_p, "per-trial probability, decimal or a/b")->required();
  chernoff_cmd->add_option("--direction", c_dir)->check(direction_check)->capture_default_str();

  // sweep and crossover share their range options
  struct SweepArgs {
    std::uint64_t n_min = 2, n_max = ref::kFigureOneMax;
    std::string ratio = std::string(ref::kContinuityRatio);
    std::string p = "calibrated";
    std::string direction = "upper";
    double threshold = ref::kCrossoverLog10;
  };
  SweepArgs s_args, x_args;
  std::string s_out, s_svg, s_title;
  auto add_range = [&](CLI::App* cmd, SweepArgs& a) {
    cmd->add_option("--n-min", a.n_min)->capture_default_str();
    cmd->add_option("--n-max", a.n_max)->capture_default_str();
    cmd->add_option("--ratio", a.ratio, "K(n) = floor(ratio n) upper, ceil lower")
        ->capture_default_str();
    cmd->add_option("--p", a.p, "decimal, a/b, or 'calibrated'")->capture_default_str();
    cmd->add_option("--direction", a.direction)->check(direction_check)->capture_default_str();
    cmd->add_option("--threshold", a.threshold, "log10 threshold")->capture_default_str();
  };
  auto* sweep_cmd = app.add_subcommand("sweep", "log10 tail for every n in a range");
  add_range(sweep_cmd, s_args);
  sweep_cmd->add_option("--out", s_out, "CSV path (stdout when omitted)");
  sweep_cmd->add_option("--svg", s_svg, "SVG plot path");
  sweep_cmd->add_option("--title", s_title, "SVG title");
  auto* crossover_cmd =
      app.add_subcommand("crossover", "first n whose log10 tail falls below a threshold");
  add_range(crossover_cmd, x_args);

  // calibrate
  std::uint64_t k_n = ref::kSamplesPerSecond, k_k = ref::kContinuityThreshold;
  std::string k_target = std::string(ref::kContinuityProbability);
  double k_tol = 1e-12;
  auto* calibrate_cmd = app.add_subcommand("calibrate", "p such that P(X >= K) hits a target");
  calibrate_cmd->add_option("--n", k_n)->capture_default_str();
  calibrate_cmd->add_option("--K,--k", k_k)->capture_default_str();
  calibrate_cmd->add_option("--target", k_target, "target probability, e.g. 1.24355865e-2018")
      ->capture_default_str();
  calibrate_cmd->add_option("--tolerance", k_tol, "tolerance on log10")->capture_default_str();

  // analyze
  std::vector<std::string> a_inputs;
  double a_eps = 0.1;
  std::string a_csv;
  auto* analyze_cmd = app.add_subcommand("analyze", "zero-crossing and proximity rates of WAVs");
  analyze_cmd->add_option("inputs", a_inputs, "files or glob patterns")->required();
  analyze_cmd->add_option("--epsilon", a_eps)->check(CLI::PositiveNumber)->capture_default_str();
  analyze_cmd->add_option("--csv", a_csv, "also write the CSV here");

  // noise
  std::uint64_t w_n = ref::kSamplesPerSecond;
  double w_amp = 1.0, w_rate = 44100.0, w_eps = 0.1;
  std::string w_out;
  auto* noise_cmd = app.add_subcommand("noise", "seeded uniform white noise");
  noise_cmd->add_option("--n", w_n)->check(CLI::PositiveNumber)->capture_default_str();
  noise_cmd->add_option("--amplitude", w_amp)->check(CLI::Range(0.0, 1.0))->capture_default_str();
  noise_cmd->add_option("--rate", w_rate)->check(CLI::PositiveNumber)->capture_default_str();
  noise_cmd->add_option("--epsilon", w_eps)->check(CLI::PositiveNumber)->capture_default_str();
  noise_cmd->add_option("--out", w_out, "16-bit WAV path");

  // montecarlo
  std::uint64_t m_n = 10, m_k = 9, m_trials = 1'000'000;
  std::string m_p = "1/2", m_dir = "upper";
  auto* mc_cmd = app.add_subcommand("montecarlo", "simulated binomial tail with Wilson interval");
  mc_cmd->add_option("--n", m_n)->capture_default_str();
  mc_cmd->add_option("--K,--k", m_k)->capture_default_str();
  mc_cmd->add_option("--p", m_p)->capture_default_str();
  mc_cmd->add_option("--direction", m_dir)->check(direction_check)->capture_default_str();
  mc_cmd->add_option("--trials", m_trials)->check(CLI::PositiveNumber)->capture_default_str();

  // spaces
  std::string sp_format = "plain";
  std::vector<std::uint64_t> sp_daw;
  auto* spaces_cmd = app.add_subcommand("spaces", "comparative sizes of musical spaces");
  spaces_cmd->add_option("--format", sp_format)
      ->check(CLI::IsMember({"plain", "markdown", "csv"}))
      ->capture_default_str();
  spaces_cmd->add_option("--daw", sp_daw, "X,N,M,Y: log10 of ((Y+1) 16384 M N)^X instead")
      ->delimiter(',')
      ->expected(4);

  // report
  std::string r_out;
  std::vector<std::string> r_corpus;
  double r_eps = 0.1;
  std::uint64_t r_trials = 1'000'000;
  auto* report_cmd = app.add_subcommand("report", "write figures, tables and manifest");
  report_cmd->add_option("--out", r_out, "output directory")->required();
  report_cmd->add_option("--corpus", r_corpus, "WAV files or glob patterns");
  report_cmd->add_option("--epsilon", r_eps)->check(CLI::PositiveNumber)->capture_default_str();
  report_cmd->add_option("--trials", r_trials)->capture_default_str();

  if (raw_args.empty()) {
    err << app.help();
    return kExitUsage;
  }

  try {
    std::vector<std::string> args = apply_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (app.count("--precision") == 0) {
    if (const char* env = std::getenv("RARITY_PRECISION"); env && *env) {
      try {
        std::size_t used = 0;
        g.precision = std::stoi(env, &used);
        if (env[used] != '\0') throw std::invalid_argument(env);
      } catch (const std::exception&) {
        err << "error: RARITY_PRECISION is not an integer: '" << env << "'\n";
        return kExitUsage;
      }
      if (g.precision < kMinPrecision) {
        err << "error: RARITY_PRECISION must be at least " << kMinPrecision << '\n';
        return kExitUsage;
      }
    }
  }
  const Precision prec{g.precision};
  const std::string stamp_text = stamp(g.precision, g.seed);
  const int digits = g.digits;

  try {
    if (*tail_cmd) {
      const auto spec = binomtail::BinomialSpec::parse(t_n, t_p, prec);
      const binomtail::TailQuery query(spec, t_k, parse_direction(t_dir));
      out << "# " << stamp_text << '\n';
      kv(out, "n", std::to_string(t_n));
      kv(out, "K", std::to_string(t_k));
      kv(out, "p", t_p);
      kv(out, "direction", t_dir);
      if (t_exact) {
        const auto exact = binomtail::tail_exact(query);
        kv(out, "exact", exact.fraction());
        kv(out, "probability", exact.scientific(digits).str());
        kv(out, "log10", format_log10(exact.log10(prec), std::max(17, digits + 8)));
      } else {
        print_magnitude(out, "probability", binomtail::tail(query), digits);
      }
    } else if (*chernoff_cmd) {
      const auto spec = binomtail::BinomialSpec::parse(c_n, c_p, prec);
      const auto bound = binomtail::chernoff(spec, c_k, parse_direction(c_dir));
      out << "# " << stamp_text << '\n';
      kv(out, "n", std::to_string(c_n));
      kv(out, "k", std::to_string(c_k));
      kv(out, "p", c_p);
      kv(out, "direction", c_dir);
      print_magnitude(out, "bound", bound, digits);
    } else if (*sweep_cmd || *crossover_cmd) {
      const SweepArgs& a = *sweep_cmd ? s_args : x_args;
      binomtail::SweepConfig config;
      config.n_min = a.n_min;
      config.n_max = a.n_max;
      config.threshold_ratio = xprec::parse_rational(a.ratio);
      config.p = resolve_p(a.p, prec);
      config.workers = g.workers;
      const Direction d = parse_direction(a.direction);
      if (*sweep_cmd) {
        const auto series = binomtail::sweep(config, d);
        PlotOptions opts{s_title, stamp_text, a.threshold};
        if (s_out.empty()) {
          out << sweep_csv(series);
          if (!s_svg.empty()) write_text_file(s_svg, sweep_svg(series, opts));
        } else {
          emit_sweep(series, s_out,
                     s_svg.empty() ? std::nullopt : std::optional<std::filesystem::path>(s_svg),
                     opts);
        }
      } else {
        const auto n = binomtail::crossover(config, d, XReal(a.threshold, prec));
        out << "# " << stamp_text << '\n';
        kv(out, "p", format_significant(config.p, 20));
        kv(out, "threshold", format_double(a.threshold));
        kv(out, "crossover", n ? std::to_string(*n) : "none");
      }
    } else if (*calibrate_cmd) {
      const auto target = xprec::parse_magnitude(k_target, prec);
      if (target.is_zero()) throw std::invalid_argument("target must be positive");
      const auto cal = binomtail::calibrate_p(k_n, k_k, target.log10(), k_tol);
      out << "# " << stamp_text << '\n';
      kv(out, "n", std::to_string(k_n));
      kv(out, "K", std::to_string(k_k));
      kv(out, "target", format_magnitude(target, digits));
      kv(out, "p", format_significant(cal.p, 20));
      print_magnitude(out, "achieved", cal.achieved, digits);
      kv(out, "residual", format_double(cal.residual));
      kv(out, "iterations", std::to_string(cal.iterations));
    } else if (*analyze_cmd) {
      const auto paths = audiostats::expand_inputs(a_inputs);
      const auto summary = audiostats::corpus_summary(paths, a_eps, g.workers);
      for (const auto& s : summary.skipped)
        err << "warning: skipped " << s.reason << '\n';
      std::ostringstream csv;
      audiostats::write_corpus_csv(csv, summary);
      out << csv.str();
      if (!a_csv.empty()) write_text_file(a_csv, csv.str());
    } else if (*noise_cmd) {
      const auto buffer = audiostats::white_noise(w_n, g.seed, w_amp, w_rate);
      out << "# " << stamp_text << '\n';
      kv(out, "prng", audiostats::kNoiseEngineName);
      kv(out, "samples", std::to_string(buffer.size()));
      if (buffer.size() >= 2) {
        const auto st = audiostats::signal_stats(buffer, w_eps);
        kv(out, "zcr", format_double(st.zcr));
        kv(out, "proximity_rate", format_double(st.proximity_rate));
        kv(out, "epsilon", format_double(w_eps));
      }
      if (!w_out.empty()) {
        audiostats::write_wav(buffer, w_out);
        kv(out, "wrote", w_out);
      }
    } else if (*mc_cmd) {
      const mpq_class p = xprec::parse_rational(m_p);
      if (p <= 0 || p >= 1) throw DomainError("p must lie strictly between 0 and 1");
      const Direction d = parse_direction(m_dir);
      const auto r =
          audiostats::monte_carlo_tail(m_n, m_k, p.get_d(), d, m_trials, g.seed, g.workers);
      out << "# " << stamp_text << '\n';
      kv(out, "prng", audiostats::kNoiseEngineName);
      kv(out, "trials", std::to_string(r.trials));
      kv(out, "successes", std::to_string(r.successes));
      kv(out, "estimate", format_double(r.estimate));
      kv(out, "ci95", "[" + format_double(r.ci_low) + ", " + format_double(r.ci_high) + "]");
      if (m_n <= 5000) {
        const auto exact = binomtail::tail_exact(
            binomtail::TailQuery(binomtail::BinomialSpec(m_n, p, prec), m_k, d));
        kv(out, "exact", exact.scientific(digits).str());
      }
    } else if (*spaces_cmd) {
      if (!sp_daw.empty()) {
        const spaces::DawSpaceSpec spec{sp_daw[0], sp_daw[1], sp_daw[2], sp_daw[3]};
        out << "# " << stamp_text << '\n';
        kv(out, "log10", format_significant(spaces::daw_space_log10(spec, prec), 20));
      } else {
        const auto registry = spaces::builtin_scenarios(prec);
        out << spaces::render_table(registry, spaces::parse_table_format(sp_format));
      }
    } else if (*report_cmd) {
      ReportConfig config;
      config.out_dir = r_out;
      config.precision = g.precision;
      config.seed = g.seed;
      config.workers = g.workers;
      config.corpus = r_corpus;
      config.epsilon = r_eps;
      config.trials = r_trials;
      const auto bundle = write_report(config);
      out << "# " << stamp_text << '\n';
      for (const auto& a : bundle.artifacts) kv(out, a.file, a.sha256);
      kv(out, "manifest", (std::filesystem::path(r_out) / "manifest.json").string());
    }
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace rarity::cli
