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

#include "adclear/monopoly.hpp"

#include <algorithm>

namespace adclear {

double optimal_price(const AdvertiserPool& pool, Supply supply) {
  if (!(supply.total > 0.0)) throw SolverError("degenerate supply");
  if (pool.empty()) return 0.0;

  const std::vector<std::size_t> order = pool.value_order();
  const std::size_t m = order.size();

  std::vector<double> suffix(m + 1, 0.0);
  for (std::size_t i = m; i-- > 0;) {
    suffix[i] = suffix[i + 1] + pool[order[i]].effective_budget();
  }

  double previous_value = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double value = pool[order[i]].value();
    const double price = suffix[i] / supply.total;
    if (price <= value) return std::max(price, previous_value);
    previous_value = value;
  }
  return pool[order.back()].value();
}

double zero_supply_price(const AdvertiserPool& pool) {
  const std::vector<std::size_t> order = pool.value_order();
  for (std::size_t i = order.size(); i-- > 0;) {
    if (pool[order[i]].effective_budget() > 0.0) return pool[order[i]].value();
  }
  return 0.0;
}

std::vector<double> allocate(const AdvertiserPool& pool, Supply supply,
                             double price) {
  std::vector<double> q(pool.size(), 0.0);
  if (!(supply.total > 0.0)) return q;

  const std::vector<std::size_t> order = pool.value_order();
  if (price <= 0.0) {
    for (std::size_t i : order) {
      const PoolEntry& e = pool[i];
      if (e.value() > 0.0 && e.effective_budget() > 0.0) {
        throw SolverError("free allocation undefined");
      }
    }
    return q;
  }

  double remaining = supply.total;
  for (auto it = order.rbegin(); it != order.rend() && remaining > 0.0; ++it) {
    const PoolEntry& e = pool[*it];
    if (e.value() < price) break;
    const double take = std::min(e.effective_budget() / price, remaining);
    q[*it] = take;
    remaining = std::max(0.0, remaining - take);
  }
  return q;
}

double revenue(double price, std::span<const double> allocation) {
  double sold = 0.0;
  for (double q : allocation) sold += q;
  return price * sold;
}

double aggregate_utility(const AdvertiserPool& pool, double price,
                         std::span<const double> allocation) {
  double total = 0.0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    total += (pool[i].value() - price) * allocation[i];
  }
  return total;
}

double social_welfare(const AdvertiserPool& pool,
                      std::span<const double> allocation) {
  double total = 0.0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    total += pool[i].value() * allocation[i];
  }
  return total;
}

double demand_at(const AdvertiserPool& pool, double price) {
  double spend = 0.0;
  for (const auto& e : pool.entries()) {
    if (e.value() >= price) spend += e.effective_budget();
  }
  return spend / price;
}

MonopolyOutcome outcome_at_price(const AdvertiserPool& pool, Supply supply,
                                 double price) {
  MonopolyOutcome out;
  out.price = price;
  out.allocation = allocate(pool, supply, price);
  out.revenue = revenue(price, out.allocation);
  out.advertiser_utility = aggregate_utility(pool, price, out.allocation);
  out.social_welfare = social_welfare(pool, out.allocation);
  if (supply.total > 0.0 && price > 0.0) {
    out.cleared = demand_at(pool, price) >= supply.total - kTolerance;
  }
  return out;
}

MonopolyOutcome solve_monopoly(const AdvertiserPool& pool, Supply supply) {
  if (!(supply.total > 0.0)) {
    return outcome_at_price(pool, supply, zero_supply_price(pool));
  }
  return outcome_at_price(pool, supply, optimal_price(pool, supply));
}

}  // namespace adclear
