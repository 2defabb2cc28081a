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

// Price competition between a leader engine and a follower engine.
//
// An advertiser with discount rho prefers the leader iff rho <= p2 / p1.
// Sorting the pool by discount, every price ratio nu induces a prefix split:
// the first k advertisers go to the leader, the rest to the follower. Each
// engine then sets its monopoly price on its own side, giving a new ratio
// nu_k. A prefix k is an equilibrium when the ratio it produces reproduces
// it, i.e. rho_k <= nu_k < rho_{k+1}. nu_k never increases with k, so when
// no prefix is stable there is exactly one advertiser l that flips sides
// whichever engine it joins; that advertiser splits its budget so the ratio
// lands on rho_l.

#ifndef ADCLEAR_DUOPOLY_HPP_
#define ADCLEAR_DUOPOLY_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "adclear/model.hpp"
#include "adclear/monopoly.hpp"

namespace adclear {

// Tolerance on |p2/p1 - rho_l| for split equilibria.
inline constexpr double kSplitTolerance = 1e-6;

struct BudgetSplit {
  AdvertiserId advertiser;
  // Fraction of the budget placed with the follower.
  double alpha = 0.0;
};

struct Partition {
  std::vector<AdvertiserId> engine1;
  std::vector<AdvertiserId> engine2;
  std::optional<BudgetSplit> split;
};

enum class EquilibriumKind { kPureNe, kSplit, kDegenerateZero };

const char* to_string(EquilibriumKind kind);

struct DuopolyEquilibrium {
  double p1 = 0.0;
  double p2 = 0.0;
  double ratio = 0.0;
  Partition partition;
  // Each engine's view of its advertisers: leader values for engine 1,
  // discounted values for engine 2, split budgets as fractions.
  AdvertiserPool engine1_pool;
  AdvertiserPool engine2_pool;
  MonopolyOutcome outcome1;
  MonopolyOutcome outcome2;
  EquilibriumKind kind = EquilibriumKind::kDegenerateZero;
};

struct RatioPoint {
  double p1 = 0.0;
  double p2 = 0.0;
  double ratio = 0.0;
};

// p2 / p1 with 0/0 -> 0 and x/0 -> +inf.
double price_ratio(double p1, double p2);

// Monopoly price of one engine; 0 for an engine without supply.
double engine_price(const AdvertiserPool& effective, double supply);

// engine 1 gets {i : rho_i <= ratio}, engine 2 the rest. ratio may be +inf.
Partition partition_by_ratio(const AdvertiserPool& pool, double ratio);

// Prices and ratio when the first k advertisers of the discount-sorted view
// go to the leader and the rest to the follower. Requires k <= pool.size().
RatioPoint ratio_map(const AdvertiserPool& pool, double s1, double s2,
                     std::size_t k);

// Scans k = m..0 and returns the first stable prefix; otherwise resolves the
// undetermined advertiser with split_budget. An engine with zero supply
// sells nothing, so the whole pool goes to the other one. Throws SolverError
// on an inconsistent scan.
DuopolyEquilibrium solve_equilibrium(const AdvertiserPool& pool, double s1,
                                     double s2);

// Both fixed-point equalities, with participation sets recomputed from the
// prices: leader {rho <= p2/p1, v >= p1}, follower {rho > p2/p1,
// rho*v >= p2}. When one engine has no supply, the other's set is every
// advertiser it can serve.
bool verify_ne(const AdvertiserPool& pool, double s1, double s2, double p1,
               double p2);

struct SplitResult {
  double alpha = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
};

// Bisection on alpha in [0, 1] for p2(alpha) / p1(alpha) = rho_l, where the
// follower receives alpha of l's budget and the leader the rest. Throws
// SolverError("not an undetermined advertiser") if the ratio does not
// straddle rho_l over [0, 1].
SplitResult split_budget(const AdvertiserPool& pool, double s1, double s2,
                         AdvertiserId undetermined);

struct DuopolyMetrics {
  double r1 = 0.0;
  double r2 = 0.0;
  double utility = 0.0;
  double brand_utility = 0.0;
  double welfare1 = 0.0;
  double welfare2 = 0.0;

  double total_revenue() const { return r1 + r2; }
  double welfare() const { return welfare1 + welfare2; }
};

// Brand advertisers have discount strictly above brand_cutoff; without a
// cutoff the pool's mean discount is used.
DuopolyMetrics duopoly_metrics(const DuopolyEquilibrium& eq,
                               const AdvertiserPool& pool,
                               std::optional<double> brand_cutoff = {});

// Mean discount of the pool (0 for an empty pool).
double mean_discount(const AdvertiserPool& pool);

// Utility of advertisers with discount above the cutoff in one outcome.
double brand_utility(const AdvertiserPool& pool,
                     const MonopolyOutcome& outcome, double cutoff);

}  // namespace adclear

#endif  // ADCLEAR_DUOPOLY_HPP_
