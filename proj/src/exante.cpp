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

#include "adclear/exante.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace adclear {

namespace {

constexpr int kMaxBisectionSteps = 200;

}  // namespace

ValueDistribution::ValueDistribution(double lo, double hi, Cdf cdf,
                                     bool uniform)
    : lo_(lo), hi_(hi), cdf_(std::move(cdf)), uniform_(uniform) {
  if (!(lo <= hi)) {
    throw std::invalid_argument("value distribution: lo must not exceed hi");
  }
}

ValueDistribution ValueDistribution::Uniform(double lo, double hi) {
  return ValueDistribution(
      lo, hi,
      [lo, hi](double v) {
        if (hi == lo) return v >= hi ? 1.0 : 0.0;
        return (v - lo) / (hi - lo);
      },
      true);
}

ValueDistribution ValueDistribution::Custom(double lo, double hi, Cdf cdf) {
  return ValueDistribution(lo, hi, std::move(cdf), false);
}

double ValueDistribution::cdf(double v) const {
  if (v < lo_) return 0.0;
  if (v >= hi_) return 1.0;
  return std::clamp(cdf_(v), 0.0, 1.0);
}

double expected_demand(const ExAnteMarket& market, double price) {
  if (!(price > 0.0)) {
    throw SolverError("demand undefined at non-positive price");
  }
  const double mass = static_cast<double>(market.advertisers) *
                      market.expected_budget;
  return mass * (1.0 - market.value_dist.cdf(price)) / price;
}

double clearing_price_numeric(const ExAnteMarket& market) {
  const double mass = static_cast<double>(market.advertisers) *
                      market.expected_budget;
  if (!(mass > 0.0)) return 0.0;
  const double s = market.supply.total;
  if (!(s > 0.0)) throw SolverError("degenerate supply");

  // excess(p) = p*S - mass*(1 - F(p)): -mass at 0, >= 0 at hi, increasing.
  auto excess = [&](double p) {
    return p * s - mass * (1.0 - market.value_dist.cdf(p));
  };
  double lo = 0.0;
  double hi = market.value_dist.hi();
  if (excess(hi) < 0.0) throw SolverError("clearing price bracket failed");

  for (int step = 0; step < kMaxBisectionSteps; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (excess(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 0.1 * kTolerance) return 0.5 * (lo + hi);
  }
  if (hi - lo > kTolerance) {
    throw SolverError("clearing price bisection did not converge");
  }
  return 0.5 * (lo + hi);
}

UniformClearing clearing_price_uniform(std::size_t advertisers,
                                       double expected_budget, double lo,
                                       double hi, double supply) {
  if (!(supply > 0.0)) throw SolverError("degenerate supply");
  if (!(lo >= 0.0 && hi >= lo)) {
    throw std::invalid_argument("uniform bounds must satisfy 0 <= lo <= hi");
  }
  UniformClearing out;
  const double mass = static_cast<double>(advertisers) * expected_budget;
  if (!(mass > 0.0)) return out;

  const double width = hi - lo;
  if (width == 0.0) {
    out.degenerate = true;
    out.price = std::min(hi, mass / supply);
    return out;
  }

  out.price = mass * hi / (mass + supply * width);
  if (out.price < lo) {
    out.below_support = true;
    ExAnteMarket market{advertisers, expected_budget,
                        ValueDistribution::Uniform(lo, hi), Supply{supply}};
    out.price = clearing_price_numeric(market);
  }
  return out;
}

}  // namespace adclear
