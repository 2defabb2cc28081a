// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force checks for the monopoly solver. Nothing here calls into
// monopoly.cpp.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

#include "adclear/monopoly.hpp"

namespace adclear {

namespace {

double revenue_at(const AdvertiserPool& pool, double supply, double price) {
  double spend = 0.0;
  for (const auto& e : pool.entries()) {
    if (e.value() >= price) spend += e.effective_budget();
  }
  return std::min(price * supply, spend);
}

}  // namespace

RevenueOracleResult oracle_revenue(const AdvertiserPool& pool, Supply supply) {
  if (pool.empty()) return {};
  const double s = supply.total;

  std::vector<std::pair<double, double>> sorted;  // (value, budget)
  for (const auto& e : pool.entries()) {
    sorted.emplace_back(e.value(), e.effective_budget());
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<double> candidates;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    candidates.push_back(sorted[i].first);
    double sum = 0.0;
    for (std::size_t j = i; j < sorted.size(); ++j) sum += sorted[j].second;
    if (s > 0.0) candidates.push_back(sum / s);
  }

  RevenueOracleResult best;
  std::vector<double> revenues;
  for (double p : candidates) {
    const double r = revenue_at(pool, s, p);
    revenues.push_back(r);
    best.revenue = std::max(best.revenue, r);
  }
  best.price = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (revenues[k] >= best.revenue - kTolerance) {
      best.price = std::min(best.price, candidates[k]);
    }
  }
  return best;
}

double cswm_oracle(const AdvertiserPool& pool, Supply supply, double price) {
  std::vector<std::pair<double, double>> eligible;  // (value, cap)
  double max_value = 0.0;
  for (const auto& e : pool.entries()) {
    if (e.value() >= price && e.effective_budget() > 0.0) {
      max_value = std::max(max_value, e.value());
      if (price > 0.0) {
        eligible.emplace_back(e.value(), e.effective_budget() / price);
      }
    }
  }
  if (!(supply.total > 0.0)) return 0.0;
  // At a zero price budgets never bind; the top value takes everything.
  if (price <= 0.0) return max_value * supply.total;

  const std::size_t n = eligible.size();
  if (n > 20) throw SolverError("cswm_oracle: too many eligible advertisers");

  double capacity = 0.0;
  for (const auto& [v, c] : eligible) capacity += c;
  const double target = std::min(supply.total, capacity);
  const double slack = 1e-12 * std::max(1.0, target);

  // A vertex saturates a subset of caps, leaves at most one variable strictly
  // between its bounds, and zeroes the rest.
  double best = 0.0;
  const std::uint32_t subsets = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    double used = 0.0;
    double welfare = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) {
        used += eligible[i].second;
        welfare += eligible[i].first * eligible[i].second;
      }
    }
    const double rest = target - used;
    if (std::fabs(rest) <= slack) {
      best = std::max(best, welfare);
      continue;
    }
    if (rest < 0.0) continue;
    for (std::size_t f = 0; f < n; ++f) {
      if (mask & (std::uint32_t{1} << f)) continue;
      if (rest <= eligible[f].second + slack) {
        best = std::max(best, welfare + eligible[f].first * rest);
      }
    }
  }
  return best;
}

}  // namespace adclear
