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

#include "rarity/binomtail/sweep.hpp"

#include <algorithm>

#include "rarity/parallel.hpp"

namespace rarity::binomtail {

void SweepConfig::validate() const {
  if (n_min < 2 || n_min > n_max) throw DomainError("sweep needs 2 <= n_min <= n_max");
  if (threshold_ratio <= 0 || threshold_ratio >= 1)
    throw DomainError("threshold ratio must lie strictly between 0 and 1");
  if (p.sign() <= 0 || p >= 1L)
    throw DomainError("per-trial probability must lie strictly between 0 and 1");
}

std::uint64_t threshold_for(std::uint64_t n, const mpq_class& ratio, Direction d) {
  mpz_class scaled = ratio.get_num() * static_cast<unsigned long>(n);
  mpz_class k;
  if (d == Direction::upper)
    mpz_fdiv_q(k.get_mpz_t(), scaled.get_mpz_t(), ratio.get_den().get_mpz_t());
  else
    mpz_cdiv_q(k.get_mpz_t(), scaled.get_mpz_t(), ratio.get_den().get_mpz_t());
  return std::min<std::uint64_t>(k.get_ui(), n);
}

namespace {

std::vector<SweepPoint> evaluate(const TailEngine& engine, std::uint64_t first, std::uint64_t last,
                                 const mpq_class& ratio, Direction d, unsigned workers) {
  std::vector<std::optional<SweepPoint>> slots(last - first + 1);
  parallel_for(slots.size(), workers, [&](std::size_t i) {
    const std::uint64_t n = first + i;
    const std::uint64_t k = threshold_for(n, ratio, d);
    slots[i] = SweepPoint{n, k, engine.tail(n, k, d)};
  });
  std::vector<SweepPoint> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

bool below(const LogMagnitude& v, const XReal& threshold) {
  return v.is_zero() || v.log10() < threshold;
}

}  // namespace

SweepSeries sweep(const SweepConfig& config, Direction d) {
  config.validate();
  TailEngine engine(config.p);
  return SweepSeries{
      evaluate(engine, config.n_min, config.n_max, config.threshold_ratio, d, config.workers)};
}

std::optional<std::uint64_t> crossover(const SweepSeries& series, const XReal& threshold_log10) {
  for (const auto& point : series.points)
    if (below(point.log10_p, threshold_log10)) return point.n;
  return std::nullopt;
}

std::optional<std::uint64_t> crossover(const SweepConfig& config, Direction d,
                                       const XReal& threshold_log10) {
  config.validate();
  if (threshold_log10.sign() >= 0) throw DomainError("crossover threshold must be negative");
  TailEngine engine(config.p);
  const std::uint64_t block = std::max<std::uint64_t>(256, 64ULL * config.workers);
  for (std::uint64_t first = config.n_min; first <= config.n_max; first += block) {
    const std::uint64_t last = std::min(config.n_max, first + block - 1);
    SweepSeries part{evaluate(engine, first, last, config.threshold_ratio, d, config.workers)};
    if (auto n = crossover(part, threshold_log10)) return n;
    if (last == config.n_max) break;
  }
  return std::nullopt;
}

LineFit fit_line(const SweepSeries& series) {
  std::vector<std::pair<double, double>> xy;
  for (const auto& p : series.points)
    if (!p.log10_p.is_zero()) xy.emplace_back(static_cast<double>(p.n), p.log10_p.log10().to_double());
  if (xy.size() < 2) throw DomainError("line fit needs at least two finite points");

  long double mx = 0, my = 0;
  for (auto [x, y] : xy) {
    mx += x;
    my += y;
  }
  mx /= xy.size();
  my /= xy.size();
  long double sxx = 0, sxy = 0, syy = 0;
  for (auto [x, y] : xy) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  const long double slope = sxy / sxx;
  const long double intercept = my - slope * mx;
  long double ss_res = 0;
  for (auto [x, y] : xy) {
    const long double r = y - (intercept + slope * x);
    ss_res += r * r;
  }
  const double r2 = syy == 0 ? 1.0 : static_cast<double>(1 - ss_res / syy);
  return LineFit{static_cast<double>(slope), static_cast<double>(intercept), r2};
}

}  // namespace rarity::binomtail
