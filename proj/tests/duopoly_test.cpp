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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "adclear/duopoly.hpp"
#include "adclear/monopoly.hpp"
#include "doctest.h"

namespace adclear {
namespace {

using P = AdvertiserPool::Params;

AdvertiserPool pool_of(std::vector<P> params) {
  return AdvertiserPool::FromParams(params);
}

AdvertiserPool example_one() { return pool_of({{1, 2, 1}, {4, 2, 0}}); }
AdvertiserPool example_two() { return pool_of({{2, 0.75, 0}, {4, 0.25, 1}}); }

std::vector<std::uint32_t> ids(const std::vector<AdvertiserId>& v) {
  std::vector<std::uint32_t> out;
  for (auto id : v) out.push_back(id.value);
  return out;
}

AdvertiserPool random_pool(std::mt19937_64& rng, std::size_t m) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const bool grid = u(rng) < 0.3;
  std::vector<P> params;
  for (std::size_t i = 0; i < m; ++i) {
    double rho = u(rng);
    if (grid) rho = std::round(rho * 4) / 4;
    params.push_back({10 * u(rng), 5 * u(rng), rho});
  }
  return pool_of(params);
}

// Every subset assignment whose prices induce exactly that assignment.
std::vector<unsigned> stable_masks(const AdvertiserPool& pool, double s1,
                                   double s2) {
  const std::size_t m = pool.size();
  std::vector<unsigned> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<std::size_t> lead;
    std::vector<std::size_t> follow;
    for (std::size_t i = 0; i < m; ++i) {
      ((mask >> i) & 1u ? lead : follow).push_back(i);
    }
    const double p1 =
        optimal_price(effective_pool(pool.select(lead), Engine::kLeader), {s1});
    const double p2 = optimal_price(
        effective_pool(pool.select(follow), Engine::kFollower), {s2});
    double nu = 0.0;
    if (p1 > 0) {
      nu = p2 / p1;
    } else if (p2 > 0) {
      nu = std::numeric_limits<double>::infinity();
    }
    bool ok = true;
    for (std::size_t i : lead) ok = ok && pool[i].advertiser.discount <= nu;
    for (std::size_t i : follow) ok = ok && pool[i].advertiser.discount > nu;
    if (ok) out.push_back(mask);
  }
  return out;
}

double payoff(double value, double price, double budget) {
  if (price <= 0) return value > 0 && budget > 0 ? 1e300 : 0.0;
  return std::max((value - price) * budget / price, 0.0);
}

TEST_CASE("price_ratio conventions") {
  CHECK(price_ratio(4, 1) == 0.25);
  CHECK(price_ratio(0, 0) == 0.0);
  CHECK(std::isinf(price_ratio(0, 2)));
}

TEST_CASE("engine_price without supply is zero") {
  CHECK(engine_price(example_one(), 0.0) == 0.0);
  CHECK(engine_price(example_one(), 1.0) == 2.0);
}

TEST_CASE("partition_by_ratio") {
  auto part = partition_by_ratio(example_one(), 0.25);
  CHECK(ids(part.engine1) == std::vector<std::uint32_t>{1});
  CHECK(ids(part.engine2) == std::vector<std::uint32_t>{0});
  CHECK_FALSE(part.split.has_value());

  part = partition_by_ratio(example_one(), std::numeric_limits<double>::infinity());
  CHECK(part.engine1.size() == 2);
  CHECK(part.engine2.empty());

  part = partition_by_ratio(pool_of({{1, 1, 0.5}, {1, 1, 0}, {1, 1, 0.2}}), 0.0);
  CHECK(ids(part.engine1) == std::vector<std::uint32_t>{1});
  CHECK(ids(part.engine2) == std::vector<std::uint32_t>{0, 2});

  // A discount equal to the ratio goes to the leader.
  part = partition_by_ratio(pool_of({{1, 1, 0.5}}), 0.5);
  CHECK(part.engine1.size() == 1);
}

TEST_CASE("ratio_map") {
  const auto pool = example_one();
  const auto mid = ratio_map(pool, 0.5, 0.5, 1);
  CHECK(mid.p1 == 4.0);
  CHECK(mid.p2 == 1.0);
  CHECK(mid.ratio == 0.25);

  const auto all_lead = ratio_map(pool, 0.5, 0.5, 2);
  CHECK(all_lead.p2 == 0.0);
  CHECK(all_lead.ratio == 0.0);

  const auto all_follow = ratio_map(pool, 0.5, 0.5, 0);
  CHECK(all_follow.p1 == 0.0);
  CHECK(std::isinf(all_follow.ratio));

  CHECK_THROWS_AS(ratio_map(pool, 0.5, 0.5, 3), std::out_of_range);
}

TEST_CASE("solve_equilibrium on the revenue example") {
  const auto eq = solve_equilibrium(example_one(), 0.5, 0.5);
  CHECK(eq.kind == EquilibriumKind::kPureNe);
  CHECK(eq.p1 == 4.0);
  CHECK(eq.p2 == 1.0);
  CHECK(eq.ratio == 0.25);
  CHECK(ids(eq.partition.engine1) == std::vector<std::uint32_t>{1});
  CHECK(ids(eq.partition.engine2) == std::vector<std::uint32_t>{0});
  CHECK(std::string(to_string(eq.kind)) == "pure_NE");

  const auto metrics = duopoly_metrics(eq, example_one());
  CHECK(metrics.r1 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(metrics.r2 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(metrics.total_revenue() == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("solve_equilibrium on the welfare example") {
  const auto eq = solve_equilibrium(example_two(), 0.5, 0.5);
  CHECK(eq.kind == EquilibriumKind::kPureNe);
  CHECK(eq.p1 == 1.5);
  CHECK(eq.p2 == 0.5);
  CHECK(eq.ratio == doctest::Approx(1.0 / 3.0));
  const auto metrics = duopoly_metrics(eq, example_two());
  // Engine 1 sells its 0.5 attentions to the v=2 advertiser.
  CHECK(metrics.welfare1 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(metrics.welfare2 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(metrics.r1 == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(metrics.r2 == doctest::Approx(0.25).epsilon(1e-12));
  // Welfare still beats the monopoly's 2.5.
  CHECK(metrics.welfare() > solve_monopoly(example_two(), {1.0}).social_welfare);
}

TEST_CASE("a single advertiser has no pure equilibrium") {
  const auto pool = pool_of({{2, 2, 0.5}});
  const auto eq = solve_equilibrium(pool, 0.5, 0.5);
  REQUIRE(eq.kind == EquilibriumKind::kSplit);
  REQUIRE(eq.partition.split.has_value());
  CHECK(eq.partition.split->advertiser.value == 0);
  CHECK(eq.partition.engine1.empty());
  CHECK(eq.partition.engine2.empty());
  const double alpha = eq.partition.split->alpha;
  CHECK(alpha >= 0.25 - 1e-9);
  CHECK(alpha <= 0.5 + 1e-9);
  CHECK(eq.p1 == doctest::Approx(2.0));
  CHECK(eq.p2 == doctest::Approx(1.0));
  CHECK(std::fabs(eq.ratio - 0.5) <= kSplitTolerance);

  const auto direct = split_budget(pool, 0.5, 0.5, AdvertiserId{0});
  CHECK(direct.alpha == alpha);
  CHECK(direct.p1 == eq.p1);
  CHECK(direct.p2 == eq.p2);
}

TEST_CASE("split with identical valuations on both engines") {
  const auto eq = solve_equilibrium(pool_of({{3, 1, 1.0}}), 0.5, 0.5);
  REQUIRE(eq.kind == EquilibriumKind::kSplit);
  CHECK(std::fabs(eq.p2 / eq.p1 - 1.0) <= kSplitTolerance);
  CHECK(eq.partition.split->alpha == doctest::Approx(0.5));
}

TEST_CASE("split_budget rejects a settled advertiser") {
  CHECK_THROWS_WITH_AS(split_budget(example_one(), 0.5, 0.5, AdvertiserId{1}),
                       "not an undetermined advertiser", SolverError);
  CHECK_THROWS_AS(split_budget(example_one(), 0.5, 0.5, AdvertiserId{9}),
                  SolverError);
}

TEST_CASE("degenerate and boundary supplies") {
  SUBCASE("zero budgets") {
    const auto pool = pool_of({{3, 0, 0.5}, {5, 0, 0.2}});
    const auto eq = solve_equilibrium(pool, 0.5, 0.5);
    CHECK(eq.kind == EquilibriumKind::kDegenerateZero);
    CHECK(eq.p1 == 0.0);
    CHECK(eq.p2 == 0.0);
    CHECK(eq.partition.engine1.size() == 2);
    CHECK(verify_ne(pool, 0.5, 0.5, 0.0, 0.0));
    CHECK(std::string(to_string(eq.kind)) == "degenerate_zero");
  }
  SUBCASE("empty pool") {
    const AdvertiserPool pool;
    const auto eq = solve_equilibrium(pool, 0.5, 0.5);
    CHECK(eq.kind == EquilibriumKind::kDegenerateZero);
    const auto metrics = duopoly_metrics(eq, pool);
    CHECK(metrics.total_revenue() == 0.0);
    CHECK(metrics.utility == 0.0);
    CHECK(metrics.brand_utility == 0.0);
    CHECK(metrics.welfare() == 0.0);
  }
  SUBCASE("follower without supply") {
    const auto pool = pool_of({{2, 2, 0.5}, {4, 1, 0.9}});
    const auto eq = solve_equilibrium(pool, 1.0, 0.0);
    CHECK(eq.kind == EquilibriumKind::kPureNe);
    CHECK(eq.partition.engine1.size() == 2);
    CHECK(eq.p2 == 0.0);
    CHECK(eq.p1 == solve_monopoly(pool, {1.0}).price);
    CHECK(verify_ne(pool, 1.0, 0.0, eq.p1, eq.p2));
  }
  SUBCASE("leader without supply") {
    const auto pool = pool_of({{2, 2, 0.5}, {4, 1, 0.9}});
    const auto eq = solve_equilibrium(pool, 0.0, 1.0);
    CHECK(eq.kind == EquilibriumKind::kPureNe);
    CHECK(eq.partition.engine2.size() == 2);
    CHECK(eq.p1 == 0.0);
    CHECK(verify_ne(pool, 0.0, 1.0, eq.p1, eq.p2));
  }
  SUBCASE("negative supply") {
    CHECK_THROWS_AS(solve_equilibrium(example_one(), -1.0, 0.5), SolverError);
  }
}

TEST_CASE("verify_ne") {
  CHECK(verify_ne(example_one(), 0.5, 0.5, 4.0, 1.0));
  CHECK_FALSE(verify_ne(example_one(), 0.5, 0.5, 1.0, 4.0));
  CHECK(verify_ne(example_two(), 0.5, 0.5, 1.5, 0.5));
  CHECK_FALSE(verify_ne(example_two(), 0.5, 0.5, 1.5, 0.6));
}

TEST_CASE("brand utility counts discounts strictly above the cutoff") {
  const auto pool = pool_of({{10, 1, 0.9}, {10, 1, 0.3}});
  const auto mono = solve_monopoly(pool, {0.1});
  const double brand = brand_utility(pool, mono, 0.5);
  CHECK(brand == doctest::Approx((10 - mono.price) * mono.allocation[0]));
  CHECK(brand_utility(pool, mono, 0.9) == 0.0);
  CHECK(mean_discount(pool) == doctest::Approx(0.6));
  CHECK(mean_discount(AdvertiserPool()) == 0.0);
}

TEST_CASE("pure equilibria match a brute-force partition search") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int pure = 0;
  int split = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const auto pool = random_pool(rng, size(rng));
    const double total = 0.1 + 2.9 * u(rng);
    const double s1 = total * (0.5 + 0.5 * u(rng));
    const double s2 = total - s1;
    if (!(pool.total_effective_budget() > 0) || s2 <= 0) continue;

    const auto stable = stable_masks(pool, s1, s2);
    const auto eq = solve_equilibrium(pool, s1, s2);
    if (eq.kind == EquilibriumKind::kPureNe) {
      ++pure;
      unsigned mask = 0;
      for (auto id : eq.partition.engine1) mask |= 1u << id.value;
      CHECK(std::find(stable.begin(), stable.end(), mask) != stable.end());
    } else {
      ++split;
      CHECK(eq.kind == EquilibriumKind::kSplit);
      CHECK(stable.empty());
    }
  }
  CHECK(pure > 100);
  CHECK(split > 100);
}

TEST_CASE("equilibrium invariants on random instances") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 1500; ++trial) {
    const auto pool = random_pool(rng, size(rng));
    const double total = 0.1 + 2.9 * u(rng);
    const double s1 = total * (0.5 + 0.5 * u(rng));
    const double s2 = total - s1;
    const std::size_t m = pool.size();

    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k <= m; ++k) {
      const double nu = ratio_map(pool, s1, s2, k).ratio;
      CHECK(nu <= previous);
      previous = nu;
    }

    const auto eq = solve_equilibrium(pool, s1, s2);
    CHECK(eq.p1 >= eq.p2 - kTolerance);
    CHECK(eq.outcome1.revenue >= eq.outcome2.revenue - kTolerance);
    const auto metrics = duopoly_metrics(eq, pool);
    CHECK(metrics.welfare() ==
          doctest::Approx(metrics.total_revenue() + metrics.utility));

    if (eq.kind == EquilibriumKind::kSplit) {
      const auto l = eq.partition.split->advertiser;
      CHECK(std::fabs(eq.p2 / eq.p1 - pool[l.value].advertiser.discount) <=
            kSplitTolerance);
      CHECK(eq.partition.engine1.size() + eq.partition.engine2.size() + 1 == m);
    } else if (eq.kind == EquilibriumKind::kPureNe) {
      CHECK(verify_ne(pool, s1, s2, eq.p1, eq.p2));
      std::set<std::uint32_t> lead;
      for (auto id : eq.partition.engine1) lead.insert(id.value);
      for (const auto& e : pool.entries()) {
        const auto& ad = e.advertiser;
        const double u1 = payoff(ad.value, eq.p1, ad.budget);
        const double u2 = payoff(ad.discount * ad.value, eq.p2, ad.budget);
        if (lead.count(ad.id.value)) {
          CHECK(u1 >= u2 - kTolerance);
        } else {
          CHECK(u2 >= u1 - kTolerance);
        }
      }
    }
  }
}

}  // namespace
}  // namespace adclear
