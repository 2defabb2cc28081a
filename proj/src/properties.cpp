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

#include "adclear/properties.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>

#include "adclear/duopoly.hpp"
#include "adclear/monopoly.hpp"

namespace adclear {

namespace {

class Tally {
 public:
  explicit Tally(std::vector<PropertyCount>& out) : out_(out) {}

  void check(const std::string& name, bool holds) {
    PropertyCount& p = find(name);
    ++p.checks;
    if (!holds) ++p.violations;
  }

 private:
  PropertyCount& find(const std::string& name) {
    for (auto& p : out_) {
      if (p.name == name) return p;
    }
    out_.push_back(PropertyCount{name, 0, 0});
    return out_.back();
  }

  std::vector<PropertyCount>& out_;
};

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

AdvertiserPool with_budget(const AdvertiserPool& pool, std::size_t i,
                           double budget) {
  std::vector<PoolEntry> entries(pool.entries().begin(), pool.entries().end());
  entries[i].advertiser.budget = budget;
  return AdvertiserPool(std::move(entries));
}

// Per-attention surplus times purchasable attentions, floored at zero. An
// engine without supply is worth nothing; a zero price on one with supply
// makes any positive value infinitely attractive.
double engine_utility(double value, double price, double budget,
                      double supply) {
  if (supply <= 0.0) return 0.0;
  if (price <= 0.0) {
    return value > 0.0 && budget > 0.0
               ? std::numeric_limits<double>::infinity()
               : 0.0;
  }
  return std::max((value - price) * budget / price, 0.0);
}

void monopoly_properties(std::mt19937_64& rng, Tally& tally) {
  const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
  const AdvertiserPool pool = random_pool(rng, m);
  const Supply supply{uniform(rng, 0.1, 3.0)};

  const MonopolyOutcome out = solve_monopoly(pool, supply);
  const RevenueOracleResult oracle = oracle_revenue(pool, supply);
  tally.check("oracle_revenue",
              std::fabs(out.revenue - oracle.revenue) <= kTolerance);

  double sold = 0.0;
  bool feasible = true;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const double q = out.allocation[i];
    sold += q;
    feasible = feasible && q >= 0.0;
    feasible = feasible &&
               out.price * q <= pool[i].effective_budget() + kTolerance;
    if (pool[i].value() < out.price - kTolerance) feasible = feasible && q == 0.0;
  }
  feasible = feasible && sold <= supply.total + kTolerance;
  tally.check("budget_feasible", feasible);
  if (out.cleared) {
    tally.check("market_clears", std::fabs(sold - supply.total) <= kTolerance);
  }
  tally.check("welfare_identity",
              std::fabs(out.social_welfare -
                        (out.revenue + out.advertiser_utility)) <= kTolerance);
  tally.check("welfare_max_allocation",
              std::fabs(out.social_welfare -
                        cswm_oracle(pool, supply, out.price)) <= kTolerance);

  // Subset monotonicity.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m; ++i) {
    if (std::bernoulli_distribution(0.5)(rng)) keep.push_back(i);
  }
  const AdvertiserPool subset = pool.select(keep);
  const MonopolyOutcome sub = solve_monopoly(subset, supply);
  tally.check("price_grows_with_pool", sub.price <= out.price + kTolerance);
  tally.check("revenue_grows_with_pool", sub.revenue <= out.revenue + kTolerance);

  // Supply monotonicity.
  double s_big = uniform(rng, 0.1, 3.0);
  double s_small = uniform(rng, 0.1, 3.0);
  if (s_big < s_small) std::swap(s_big, s_small);
  if (s_big > s_small) {
    const MonopolyOutcome big = solve_monopoly(pool, Supply{s_big});
    const MonopolyOutcome small = solve_monopoly(pool, Supply{s_small});
    tally.check("price_falls_with_supply", big.price <= small.price + kTolerance);
    tally.check("revenue_grows_with_supply",
                big.revenue >= small.revenue - kTolerance);
  }

  // Budget continuity.
  for (std::size_t i = 0; i < m; ++i) {
    for (double eps : {1e-3, 1e-4}) {
      const double before = optimal_price(pool, supply);
      const double after = optimal_price(
          with_budget(pool, i, pool[i].advertiser.budget + eps), supply);
      const double diff = after - before;
      tally.check("price_budget_continuity",
                  diff >= -kTolerance && diff <= eps / supply.total + kTolerance);
    }
  }
}

void duopoly_properties(std::mt19937_64& rng, Tally& tally) {
  const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
  const AdvertiserPool pool = random_pool(rng, m);
  const double total = uniform(rng, 0.1, 3.0);
  const double n1 = std::bernoulli_distribution(0.05)(rng)
                        ? 1.0
                        : uniform(rng, 0.5, 1.0);
  const double s1 = total * n1;
  const double s2 = total - s1;

  bool monotone = true;
  double previous = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k <= m; ++k) {
    const double nu = ratio_map(pool, s1, s2, k).ratio;
    monotone = monotone && nu <= previous + kTolerance;
    previous = nu;
  }
  tally.check("ratio_map_monotone", monotone);

  const DuopolyEquilibrium eq = solve_equilibrium(pool, s1, s2);
  tally.check("price_order", eq.p1 >= eq.p2 - kTolerance);
  tally.check("revenue_order",
              eq.outcome1.revenue >= eq.outcome2.revenue - kTolerance);

  if (eq.kind == EquilibriumKind::kSplit) {
    double rho = 0.0;
    for (const auto& e : pool.entries()) {
      if (e.advertiser.id == eq.partition.split->advertiser) {
        rho = e.advertiser.discount;
      }
    }
    tally.check("split_residual",
                std::fabs(eq.p2 / eq.p1 - rho) <= kSplitTolerance);
  }
  if (eq.kind == EquilibriumKind::kPureNe) {
    tally.check("pure_ne_verifies", verify_ne(pool, s1, s2, eq.p1, eq.p2));

    std::map<AdvertiserId, int> side;
    for (AdvertiserId id : eq.partition.engine1) side[id] = 1;
    for (AdvertiserId id : eq.partition.engine2) side[id] = 2;
    bool stable = true;
    for (const auto& e : pool.entries()) {
      const Advertiser& ad = e.advertiser;
      const double u1 = engine_utility(ad.value, eq.p1, ad.budget, s1);
      const double u2 = engine_utility(ad.discount * ad.value, eq.p2, ad.budget,
                                       s2);
      if (side[ad.id] == 1) {
        stable = stable && (u1 >= u2 - kTolerance || std::isinf(u1));
      } else {
        stable = stable && (u2 >= u1 - kTolerance || std::isinf(u2));
      }
    }
    tally.check("stability_closure", stable);
  }
}

}  // namespace

std::size_t VerifyReport::total_violations() const {
  std::size_t total = 0;
  for (const auto& p : properties) total += p.violations;
  return total;
}

AdvertiserPool random_pool(std::mt19937_64& rng, std::size_t m) {
  const bool grid_values = std::bernoulli_distribution(0.25)(rng);
  const bool grid_discounts = std::bernoulli_distribution(0.25)(rng);
  std::vector<Advertiser> ads;
  for (std::size_t i = 0; i < m; ++i) {
    Advertiser ad;
    ad.id = AdvertiserId{static_cast<std::uint32_t>(i)};
    ad.value = uniform(rng, 0.0, 10.0);
    if (grid_values) ad.value = std::round(ad.value / 2.0) * 2.0;
    ad.budget = std::bernoulli_distribution(0.05)(rng) ? 0.0
                                                       : uniform(rng, 0.0, 5.0);
    ad.discount = uniform(rng, 0.0, 1.0);
    if (grid_discounts) ad.discount = std::round(ad.discount * 4.0) / 4.0;
    ads.push_back(ad);
  }
  return AdvertiserPool::FromAdvertisers(ads);
}

VerifyReport verify_suite(std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  VerifyReport report;
  report.trials = trials;
  report.seed = seed;
  Tally tally(report.properties);
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    try {
      monopoly_properties(rng, tally);
      duopoly_properties(rng, tally);
      tally.check("solver_errors", true);
    } catch (const SolverError&) {
      tally.check("solver_errors", false);
    }
  }
  return report;
}

void print_report(const VerifyReport& report, std::ostream& out) {
  out << "trials " << report.trials << " seed " << report.seed << '\n';
  for (const auto& p : report.properties) {
    out << p.name << ": " << p.checks << " checks, " << p.violations
        << " violations\n";
  }
  out << (report.ok() ? "OK" : "VIOLATIONS FOUND") << '\n';
}

}  // namespace adclear
