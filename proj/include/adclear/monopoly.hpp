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

// Ex-post monopoly: revenue-optimal uniform price for budget-constrained
// advertisers, the welfare-maximizing allocation at that price, and metrics.
//
// All functions read PoolEntry::value() as the value the engine sees and
// PoolEntry::effective_budget() as the budget, so the same code serves the
// leader and follower views of a pool and fractional budget participation.

#ifndef ADCLEAR_MONOPOLY_HPP_
#define ADCLEAR_MONOPOLY_HPP_

#include <span>
#include <vector>

#include "adclear/model.hpp"

namespace adclear {

struct MonopolyOutcome {
  double price = 0.0;
  // Attentions per pool entry, aligned with pool.entries().
  std::vector<double> allocation;
  double revenue = 0.0;
  double advertiser_utility = 0.0;
  double social_welfare = 0.0;
  // Demand at the price covers the supply.
  bool cleared = false;
};

// Revenue-maximizing market-clearing price.
//
// Walks the value-sorted pool from the lowest value up. At position i the
// candidate price is (sum of budgets from i upward) / S; the first candidate
// that does not exceed v_i is returned, raised to the previous value if it
// falls below it. If no candidate qualifies the highest value is returned.
// Suffix budget sums are precomputed, so the walk is O(m) after sorting.
//
// Throws SolverError("degenerate supply") when supply.total <= 0.
double optimal_price(const AdvertiserPool& pool, Supply supply);

// Limit of optimal_price as the supply shrinks to zero: the value of the
// highest-ranked advertiser holding a positive budget (0 if none). Used for
// an engine that has no supply at all.
double zero_supply_price(const AdvertiserPool& pool);

// Greedy allocation at a fixed price: advertisers with value >= price are
// served in descending value order (ties: later input index first), each
// receiving min(budget / price, remaining supply).
//
// Throws SolverError("free allocation undefined") when price <= 0 and some
// eligible advertiser with a positive budget has a positive value.
std::vector<double> allocate(const AdvertiserPool& pool, Supply supply,
                             double price);

double revenue(double price, std::span<const double> allocation);
double aggregate_utility(const AdvertiserPool& pool, double price,
                         std::span<const double> allocation);
double social_welfare(const AdvertiserPool& pool,
                      std::span<const double> allocation);

// Aggregate budget-constrained demand at a positive price, counting
// advertisers whose value is at least the price.
double demand_at(const AdvertiserPool& pool, double price);

// Full outcome at a caller-supplied price.
MonopolyOutcome outcome_at_price(const AdvertiserPool& pool, Supply supply,
                                 double price);

// optimal_price + allocate + metrics. A zero supply yields the
// zero_supply_price with an empty (all-zero) allocation.
MonopolyOutcome solve_monopoly(const AdvertiserPool& pool, Supply supply);

// Independent verification oracles. These do not share code with the
// solver above.

struct RevenueOracleResult {
  double price = 0.0;
  double revenue = 0.0;
};

// Evaluates R(p) = min(p*S, sum of budgets with value >= p) on every value
// and every suffix-budget quotient, in O(m^2). Returns the best revenue and
// the smallest candidate price attaining it (within kTolerance).
RevenueOracleResult oracle_revenue(const AdvertiserPool& pool, Supply supply);

// Maximum welfare sum(v_i q_i) at a fixed price subject to budget caps,
// participation (v_i >= price), and selling min(S, demand) attentions.
// Solved by enumerating the vertices of the feasible polytope, so it is
// exponential in the number of eligible advertisers (limit 20).
double cswm_oracle(const AdvertiserPool& pool, Supply supply, double price);

}  // namespace adclear

#endif  // ADCLEAR_MONOPOLY_HPP_
