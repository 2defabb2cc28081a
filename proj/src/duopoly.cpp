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

#include "adclear/duopoly.hpp"

#include <cmath>
#include <limits>
#include <span>
#include <utility>

namespace adclear {

namespace {

constexpr int kMaxSplitSteps = 200;

struct Sides {
  AdvertiserPool leader;    // raw entries, leader values
  AdvertiserPool follower;  // raw entries, undiscounted
};

// First `k` entries of `order` go to the leader, the rest to the follower.
// With a split, the entry at position k is shared: (1 - alpha) of its budget
// to the leader and alpha to the follower, and the follower side starts at
// k + 1.
Sides make_sides(const AdvertiserPool& pool,
                 std::span<const std::size_t> order, std::size_t k,
                 std::optional<double> alpha = {}) {
  std::vector<PoolEntry> leader;
  std::vector<PoolEntry> follower;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const PoolEntry& e = pool[order[pos]];
    if (pos < k) {
      leader.push_back(e);
    } else if (alpha && pos == k) {
      PoolEntry lead = e;
      PoolEntry follow = e;
      lead.budget_fraction = e.budget_fraction * (1.0 - *alpha);
      follow.budget_fraction = e.budget_fraction * *alpha;
      leader.push_back(lead);
      follower.push_back(follow);
    } else {
      follower.push_back(e);
    }
  }
  return {AdvertiserPool(std::move(leader)),
          AdvertiserPool(std::move(follower))};
}

RatioPoint prices_for(const Sides& sides, double s1, double s2) {
  RatioPoint out;
  out.p1 = engine_price(effective_pool(sides.leader, Engine::kLeader), s1);
  out.p2 = engine_price(effective_pool(sides.follower, Engine::kFollower), s2);
  out.ratio = price_ratio(out.p1, out.p2);
  return out;
}

std::vector<AdvertiserId> ids_of(const AdvertiserPool& pool) {
  std::vector<AdvertiserId> ids;
  for (const auto& e : pool.entries()) ids.push_back(e.advertiser.id);
  return ids;
}

DuopolyEquilibrium assemble(const Sides& sides, double s1, double s2,
                            EquilibriumKind kind) {
  DuopolyEquilibrium eq;
  eq.kind = kind;
  eq.engine1_pool = effective_pool(sides.leader, Engine::kLeader);
  eq.engine2_pool = effective_pool(sides.follower, Engine::kFollower);
  eq.p1 = engine_price(eq.engine1_pool, s1);
  eq.p2 = engine_price(eq.engine2_pool, s2);
  eq.ratio = price_ratio(eq.p1, eq.p2);
  eq.outcome1 = outcome_at_price(eq.engine1_pool, Supply{s1}, eq.p1);
  eq.outcome2 = outcome_at_price(eq.engine2_pool, Supply{s2}, eq.p2);
  eq.partition.engine1 = ids_of(sides.leader);
  eq.partition.engine2 = ids_of(sides.follower);
  return eq;
}

SplitResult split_at(const AdvertiserPool& pool,
                     std::span<const std::size_t> order, std::size_t pos,
                     double s1, double s2) {
  const double rho = pool[order[pos]].advertiser.discount;
  auto gap = [&](double alpha) {
    const RatioPoint point =
        prices_for(make_sides(pool, order, pos, alpha), s1, s2);
    return std::pair{point.ratio - rho, point};
  };

  auto [g_lo, point_lo] = gap(0.0);
  auto [g_hi, point_hi] = gap(1.0);
  if (!(g_lo < 0.0) || g_hi < 0.0) {
    throw SolverError("not an undetermined advertiser");
  }

  double lo = 0.0;
  double hi = 1.0;
  for (int step = 0; step < kMaxSplitSteps && hi - lo > 1e-15; ++step) {
    const double mid = 0.5 * (lo + hi);
    auto [g_mid, point_mid] = gap(mid);
    if (g_mid < 0.0) {
      lo = mid;
      g_lo = g_mid;
      point_lo = point_mid;
    } else {
      hi = mid;
      g_hi = g_mid;
      point_hi = point_mid;
    }
    if (std::fabs(g_mid) <= 1e-12) break;
  }

  const bool use_hi = std::fabs(g_hi) <= std::fabs(g_lo);
  const double g = use_hi ? g_hi : g_lo;
  const RatioPoint& point = use_hi ? point_hi : point_lo;
  if (!(std::fabs(g) <= kSplitTolerance)) {
    throw SolverError("budget split did not converge");
  }
  return SplitResult{use_hi ? hi : lo, point.p1, point.p2};
}

}  // namespace

const char* to_string(EquilibriumKind kind) {
  switch (kind) {
    case EquilibriumKind::kPureNe:
      return "pure_NE";
    case EquilibriumKind::kSplit:
      return "split_equilibrium";
    case EquilibriumKind::kDegenerateZero:
      return "degenerate_zero";
  }
  return "unknown";
}

double price_ratio(double p1, double p2) {
  if (p1 > 0.0) return p2 / p1;
  return p2 > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

double engine_price(const AdvertiserPool& effective, double supply) {
  if (supply > 0.0) return optimal_price(effective, Supply{supply});
  return 0.0;
}

Partition partition_by_ratio(const AdvertiserPool& pool, double ratio) {
  Partition out;
  for (const auto& e : pool.entries()) {
    if (e.advertiser.discount <= ratio) {
      out.engine1.push_back(e.advertiser.id);
    } else {
      out.engine2.push_back(e.advertiser.id);
    }
  }
  return out;
}

RatioPoint ratio_map(const AdvertiserPool& pool, double s1, double s2,
                     std::size_t k) {
  if (k > pool.size()) throw std::out_of_range("ratio_map: k exceeds pool");
  const std::vector<std::size_t> order = pool.discount_order();
  return prices_for(make_sides(pool, order, k), s1, s2);
}

DuopolyEquilibrium solve_equilibrium(const AdvertiserPool& pool, double s1,
                                     double s2) {
  if (!(s1 >= 0.0 && s2 >= 0.0)) {
    throw SolverError("engine supplies must be non-negative");
  }
  const std::vector<std::size_t> order = pool.discount_order();
  const std::size_t m = order.size();

  if (!(pool.total_effective_budget() > 0.0)) {
    DuopolyEquilibrium eq = assemble(make_sides(pool, order, m), s1, s2,
                                     EquilibriumKind::kDegenerateZero);
    eq.p1 = eq.p2 = eq.ratio = 0.0;
    return eq;
  }

  // An engine without supply sells nothing; everyone buys from the other.
  if (s2 == 0.0) {
    return assemble(make_sides(pool, order, m), s1, s2,
                    EquilibriumKind::kPureNe);
  }
  if (s1 == 0.0) {
    return assemble(make_sides(pool, order, 0), s1, s2,
                    EquilibriumKind::kPureNe);
  }

  auto rho = [&](std::size_t pos) { return pool[order[pos]].advertiser.discount; };

  std::vector<RatioPoint> points(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    points[k] = prices_for(make_sides(pool, order, k), s1, s2);
  }

  for (std::size_t k = m + 1; k-- > 0;) {
    const double nu = points[k].ratio;
    const bool leader_side_holds = k == 0 || rho(k - 1) <= nu;
    const bool follower_side_holds = k == m || nu < rho(k);
    if (leader_side_holds && follower_side_holds) {
      return assemble(make_sides(pool, order, k), s1, s2,
                      EquilibriumKind::kPureNe);
    }
  }

  // Undetermined advertiser at position pos: with it on the follower side
  // the ratio is at least its discount, on the leader side strictly below.
  for (std::size_t pos = 0; pos < m; ++pos) {
    if (points[pos].ratio >= rho(pos) && rho(pos) > points[pos + 1].ratio) {
      const SplitResult split = split_at(pool, order, pos, s1, s2);
      DuopolyEquilibrium eq =
          assemble(make_sides(pool, order, pos, split.alpha), s1, s2,
                   EquilibriumKind::kSplit);
      const AdvertiserId l = pool[order[pos]].advertiser.id;
      std::erase(eq.partition.engine1, l);
      std::erase(eq.partition.engine2, l);
      eq.partition.split = BudgetSplit{l, split.alpha};
      return eq;
    }
  }
  throw SolverError("equilibrium scan failure");
}

bool verify_ne(const AdvertiserPool& pool, double s1, double s2, double p1,
               double p2) {
  const double nu = price_ratio(p1, p2);
  std::vector<std::size_t> leader;
  std::vector<std::size_t> follower;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const Advertiser& ad = pool[i].advertiser;
    const bool to_leader = s2 == 0.0 || (s1 > 0.0 && ad.discount <= nu);
    if (to_leader) {
      if (ad.value >= p1) leader.push_back(i);
    } else if (ad.discount * ad.value >= p2) {
      follower.push_back(i);
    }
  }
  const double best1 =
      engine_price(effective_pool(pool.select(leader), Engine::kLeader), s1);
  const double best2 = engine_price(
      effective_pool(pool.select(follower), Engine::kFollower), s2);
  return std::fabs(best1 - p1) <= kTolerance &&
         std::fabs(best2 - p2) <= kTolerance;
}

SplitResult split_budget(const AdvertiserPool& pool, double s1, double s2,
                         AdvertiserId undetermined) {
  const std::vector<std::size_t> order = pool.discount_order();
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (pool[order[pos]].advertiser.id == undetermined) {
      return split_at(pool, order, pos, s1, s2);
    }
  }
  throw SolverError("split_budget: unknown advertiser");
}

double mean_discount(const AdvertiserPool& pool) {
  if (pool.empty()) return 0.0;
  double total = 0.0;
  for (const auto& e : pool.entries()) total += e.advertiser.discount;
  return total / static_cast<double>(pool.size());
}

double brand_utility(const AdvertiserPool& pool,
                     const MonopolyOutcome& outcome, double cutoff) {
  double total = 0.0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (pool[i].advertiser.discount > cutoff) {
      total += (pool[i].value() - outcome.price) * outcome.allocation[i];
    }
  }
  return total;
}

DuopolyMetrics duopoly_metrics(const DuopolyEquilibrium& eq,
                               const AdvertiserPool& pool,
                               std::optional<double> brand_cutoff) {
  const double cutoff = brand_cutoff.value_or(mean_discount(pool));
  DuopolyMetrics out;
  out.r1 = eq.outcome1.revenue;
  out.r2 = eq.outcome2.revenue;
  out.utility =
      eq.outcome1.advertiser_utility + eq.outcome2.advertiser_utility;
  out.brand_utility = brand_utility(eq.engine1_pool, eq.outcome1, cutoff) +
                      brand_utility(eq.engine2_pool, eq.outcome2, cutoff);
  out.welfare1 = eq.outcome1.social_welfare;
  out.welfare2 = eq.outcome2.social_welfare;
  return out;
}

}  // namespace adclear
