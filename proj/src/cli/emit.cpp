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

#include "rarity/cli/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "rarity/cli/format.hpp"

namespace rarity::cli {

namespace {

constexpr double kWidth = 960, kHeight = 600;
constexpr double kLeft = 100, kRight = 30, kTop = 50, kBottom = 80;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Comments may not contain "--".
std::string comment_safe(std::string_view s) {
  std::string out(s);
  for (std::size_t i; (i = out.find("--")) != std::string::npos;) out.replace(i, 2, "- -");
  return out;
}

std::vector<double> nice_ticks(double lo, double hi, int target = 6) {
  const double span = hi - lo;
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (span / step <= target) break;
  }
  std::vector<double> ticks;
  for (double t = std::ceil(lo / step) * step; t <= hi + step * 1e-9; t += step)
    ticks.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
  return ticks;
}

}  // namespace

std::string sweep_csv(const binomtail::SweepSeries& series) {
  std::string out = "n,log10_p\n";
  for (const auto& pt : series.points)
    out += std::to_string(pt.n) + "," + format_log10(pt.log10_p, 15) + "\n";
  return out;
}

std::string sweep_svg(const binomtail::SweepSeries& series, const PlotOptions& options) {
  if (series.points.empty()) throw std::invalid_argument("empty series");
  std::vector<double> xs, ys;
  for (const auto& pt : series.points) {
    if (pt.log10_p.is_zero()) continue;
    xs.push_back(static_cast<double>(pt.n));
    ys.push_back(pt.log10_p.log10().to_double());
  }
  if (xs.empty()) throw std::invalid_argument("series has no finite values");

  double x_lo = xs.front(), x_hi = xs.back();
  double y_lo = *std::min_element(ys.begin(), ys.end());
  double y_hi = *std::max_element(ys.begin(), ys.end());
  if (x_hi == x_lo) x_lo -= 1, x_hi += 1;
  if (y_hi - y_lo < 1e-12) y_lo -= 1, y_hi += 1;

  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * pw; };
  auto sy = [&](double y) { return kTop + (y_hi - y) / (y_hi - y_lo) * ph; };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"960\" height=\"600\" "
       "viewBox=\"0 0 960 600\">\n";
  if (!options.stamp.empty()) s += "<!-- " + comment_safe(options.stamp) + " -->\n";
  s += "<rect x=\"0\" y=\"0\" width=\"960\" height=\"600\" fill=\"white\"/>\n";
  if (!options.title.empty())
    s += "<text x=\"480\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"18\">" + escape(options.title) + "</text>\n";

  // Axes and ticks.
  const std::string x0 = num(kLeft), x1 = num(kLeft + pw), y0 = num(kTop), y1 = num(kTop + ph);
  s += "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  s += "<line x1=\"" + x0 + "\" y1=\"" + y1 + "\" x2=\"" + x1 + "\" y2=\"" + y1 + "\"/>\n";
  s += "<line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x0 + "\" y2=\"" + y1 + "\"/>\n";
  s += "</g>\n";
  s += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  for (double t : nice_ticks(x_lo, x_hi)) {
    const std::string px = num(sx(t));
    s += "<line x1=\"" + px + "\" y1=\"" + y1 + "\" x2=\"" + px + "\" y2=\"" +
         num(kTop + ph + 5) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + px + "\" y=\"" + num(kTop + ph + 20) + "\" text-anchor=\"middle\">" +
         tick_label(t) + "</text>\n";
  }
  for (double t : nice_ticks(y_lo, y_hi)) {
    const std::string py = num(sy(t));
    s += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + py + "\" x2=\"" + x0 + "\" y2=\"" + py +
         "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(sy(t) + 4) + "\" text-anchor=\"end\">" +
         tick_label(t) + "</text>\n";
  }
  s += "</g>\n";
  s += "<text x=\"" + num(kLeft + pw / 2) + "\" y=\"" + num(kHeight - 25) +
       "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">n</text>\n";
  s += "<text x=\"25\" y=\"" + num(kTop + ph / 2) + "\" text-anchor=\"middle\" "
       "font-family=\"sans-serif\" font-size=\"14\" transform=\"rotate(-90 25 " +
       num(kTop + ph / 2) + ")\">log10 probability</text>\n";

  if (options.threshold_log10 && *options.threshold_log10 >= y_lo &&
      *options.threshold_log10 <= y_hi) {
    const std::string py = num(sy(*options.threshold_log10));
    s += "<line x1=\"" + x0 + "\" y1=\"" + py + "\" x2=\"" + x1 + "\" y2=\"" + py +
         "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";
    s += "<text x=\"" + num(kLeft + pw - 4) + "\" y=\"" + num(sy(*options.threshold_log10) - 6) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\"gray\">" +
         tick_label(*options.threshold_log10) + "</text>\n";
  }

  if (xs.size() == 1) {
    s += "<circle cx=\"" + num(sx(xs[0])) + "\" cy=\"" + num(sy(ys[0])) +
         "\" r=\"4\" fill=\"steelblue\"/>\n";
  } else {
    s += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ' ';
      s += num(sx(xs[i])) + "," + num(sy(ys[i]));
    }
    s += "\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

void emit_sweep(const binomtail::SweepSeries& series, const std::filesystem::path& csv,
                const std::optional<std::filesystem::path>& svg, const PlotOptions& options) {
  write_text_file(csv, sweep_csv(series));
  if (svg) write_text_file(*svg, sweep_svg(series, options));
}

}  // namespace rarity::cli
