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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rarity/cli/emit.hpp"
#include "rarity/cli/format.hpp"
#include "rarity/cli/report.hpp"
#include "rarity/cli/run.hpp"

using namespace rarity;
using namespace rarity::cli;
namespace fs = std::filesystem;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Value of a "key: value" line, or "" when absent.
std::string field(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
  return "";
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("rarity_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}
}  // namespace

TEST_CASE("tail: worked example with and without the exact path") {
  const auto r = invoke({"tail", "--n", "10", "--K", "9", "--p", "1/2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("# rarity 1.0.0 precision=64 seed=42\n", 0) == 0);
  CHECK(field(r.out, "probability") == "1.07421875e-2");
  const auto e = invoke({"tail", "--n=10", "--k=9", "--p=0.5", "--exact"});
  CHECK(field(e.out, "exact") == "11/1024");
}

TEST_CASE("chernoff: published bound and digit control") {
  const auto r = invoke({"chernoff", "--n", "44100", "--k", "2205", "--p", "1/2"});
  CHECK(r.code == kExitOk);
  CHECK(field(r.out, "bound") == "4.14847122e-9474");
  const auto d = invoke({"--digits", "8", "chernoff", "--n", "44100", "--k", "2205", "--p", "1/2"});
  CHECK(field(d.out, "bound") == "4.1484712e-9474");
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"bogus"}).code == kExitUsage);
  CHECK(invoke({"tail", "--n", "10", "--K", "11", "--p", "1/2"}).code == kExitUsage);
  CHECK(invoke({"tail", "--n", "10", "--K", "3", "--p", "1.5"}).code == kExitUsage);
  CHECK(invoke({"tail", "--n", "10", "--K", "3"}).code == kExitUsage);
  CHECK(invoke({"--precision", "3", "tail", "--n", "10", "--K", "3", "--p", "1/2"}).code ==
        kExitUsage);
  CHECK(invoke({"spaces", "--format", "xml"}).code == kExitUsage);
  CHECK(invoke({"spaces", "--daw", "1,0,1,1"}).code == kExitUsage);
  const auto v = invoke({"--version"});
  CHECK(v.code == kExitOk);
  CHECK(v.out.find(kVersion) != std::string::npos);
}

TEST_CASE("precision from the environment") {
  const std::vector<std::string> args{"tail", "--n", "10", "--K", "9", "--p", "1/2"};
  ::setenv("RARITY_PRECISION", "100", 1);
  CHECK(invoke(args).out.find("precision=100") != std::string::npos);
  CHECK(invoke({"--precision", "80", "tail", "--n", "10", "--K", "9", "--p", "1/2"})
            .out.find("precision=80") != std::string::npos);
  ::setenv("RARITY_PRECISION", "3", 1);
  CHECK(invoke(args).code == kExitUsage);
  ::setenv("RARITY_PRECISION", "lots", 1);
  CHECK(invoke(args).code == kExitUsage);
  ::unsetenv("RARITY_PRECISION");
}

TEST_CASE("config file supplies defaults and flags override it") {
  const fs::path dir = scratch_dir("config");
  std::ofstream(dir / "rarity.conf") << "# defaults\nn = 10\nK = 9\np = 1/2\nseed = 7\n";
  const std::string conf = (dir / "rarity.conf").string();
  const auto r = invoke({"--config", conf, "tail"});
  CHECK(r.code == kExitOk);
  CHECK(field(r.out, "probability") == "1.07421875e-2");
  CHECK(r.out.find("seed=7") != std::string::npos);
  const auto o = invoke({"--config", conf, "tail", "--k", "10"});
  CHECK(field(o.out, "probability") == "9.765625e-4");
  CHECK(invoke({"--config", (dir / "missing.conf").string(), "tail"}).code != kExitOk);
  fs::remove_all(dir);
}

TEST_CASE("sweep: CSV is deterministic across worker counts") {
  const std::vector<std::string> base{"sweep", "--n-min", "2", "--n-max", "400", "--p", "0.8"};
  auto with_workers = [&](const char* w) {
    std::vector<std::string> args{"--workers", w};
    args.insert(args.end(), base.begin(), base.end());
    return invoke(args);
  };
  const auto a = with_workers("1");
  const auto b = with_workers("4");
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("n,log10_p\n2,", 0) == 0);
  std::size_t lines = 0;
  for (char c : a.out) lines += c == '\n';
  CHECK(lines == 400);
}

TEST_CASE("sweep: file outputs and a single-point plot") {
  const fs::path dir = scratch_dir("sweep");
  const auto r = invoke({"sweep", "--n-min", "44100", "--n-max", "44100", "--p", "1/10", "--out",
                         (dir / "s.csv").string(), "--svg", (dir / "s.svg").string()});
  CHECK(r.code == kExitOk);
  const std::string csv = slurp(dir / "s.csv");
  CHECK(csv.rfind("n,log10_p\n44100,-43145.3773572853", 0) == 0);
  const std::string svg = slurp(dir / "s.svg");
  CHECK(svg.find("<circle") != std::string::npos);
  CHECK(svg.find("precision=64") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("crossover and calibrate") {
  const auto c = invoke({"crossover", "--p", "0.7", "--n-max", "3000"});
  CHECK(c.code == kExitOk);
  CHECK(field(c.out, "crossover") == "570");
  const auto none = invoke({"crossover", "--p", "0.7", "--n-max", "100"});
  CHECK(field(none.out, "crossover") == "none");
  const auto k = invoke({"calibrate", "--n", "10", "--K", "9", "--target", "11/1024"});
  CHECK(k.code == kExitOk);
  CHECK(std::abs(std::stod(field(k.out, "p")) - 0.5) < 1e-6);
}

TEST_CASE("noise, analyze and montecarlo") {
  const fs::path dir = scratch_dir("noise");
  const auto n = invoke({"noise", "--n", "20000", "--out", (dir / "w.wav").string()});
  CHECK(n.code == kExitOk);
  CHECK(std::abs(std::stod(field(n.out, "zcr")) - 0.5) < 0.02);
  const auto a = invoke({"analyze", (dir / "*.wav").string(), "--csv", (dir / "a.csv").string()});
  CHECK(a.code == kExitOk);
  CHECK(slurp(dir / "a.csv").rfind("file,samples,sample_rate,zcr,proximity_rate,epsilon\n", 0) == 0);
  CHECK(invoke({"analyze", (dir / "nothing*.wav").string()}).code != kExitOk);

  const auto m1 = invoke({"montecarlo", "--trials", "20000"});
  const auto m2 = invoke({"--workers", "3", "montecarlo", "--trials", "20000"});
  CHECK(m1.code == kExitOk);
  CHECK(field(m1.out, "successes") == field(m2.out, "successes"));
  CHECK(field(m1.out, "exact") == "1.07421875e-2");
  fs::remove_all(dir);
}

TEST_CASE("spaces: formats and markers") {
  const auto md = invoke({"spaces", "--format", "plain"});
  CHECK(md.code == kExitOk);
  for (const char* id : {"continuity", "humans", "mobiles", "soundcloud"}) {
    CAPTURE(id);
    const auto row = md.out.find(std::string("\n") + id + " ");
    REQUIRE(row != std::string::npos);
    const auto end = md.out.find('\n', row + 1);
    CHECK(md.out.substr(row, end - row).find("MISMATCH") != std::string::npos);
  }
  const auto csv = invoke({"spaces", "--format", "csv"});
  CHECK(csv.out.rfind("id,description,log2,log10,paper_order,provenance,mismatch\n", 0) == 0);
  const auto daw = invoke({"spaces", "--daw", "96,100,100,99"});
  CHECK(field(daw.out, "log10").rfind("980.584314172390726", 0) == 0);
}

TEST_CASE("number formatting round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 12345.678, 5.0545393498238515e-05, -2.5e-300})
    CHECK(std::stod(format_double(v)) == v);
  CHECK(format_magnitude(xprec::LogMagnitude::zero(xprec::Precision{64}), 9) == "0");
  CHECK(format_log10(xprec::LogMagnitude::zero(xprec::Precision{64})) == "-inf");
  CHECK(stamp(64, 42) == "rarity 1.0.0 precision=64 seed=42");
}

TEST_CASE("report: failure leaves no partial output behind") {
  const fs::path dir = scratch_dir("report_fail");
  std::ofstream(dir / "file") << "x";
  const fs::path target = dir / "file" / "out";
  ReportConfig cfg;
  cfg.out_dir = target;
  cfg.trials = 1000;
  CHECK_THROWS(write_report(cfg));
  CHECK_FALSE(fs::exists(target));
  for (const auto& entry : fs::directory_iterator(dir)) CHECK(entry.path().filename() == "file");
  fs::remove_all(dir);
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}
