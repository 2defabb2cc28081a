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

#include "adclear/simulation.hpp"

#include <omp.h>

#include <cmath>
#include <random>
#include <span>
#include <stdexcept>
#include <string>

#include "adclear/hotelling.hpp"
#include "adclear/monopoly.hpp"

namespace adclear {

namespace {

void check_range(const UniformRange& r, const char* name) {
  if (!(r.lo <= r.hi)) {
    throw std::invalid_argument(std::string(name) + ": lo must not exceed hi");
  }
}

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t m,
                             std::uint64_t index) {
  auto lo = [](std::uint64_t x) { return static_cast<std::uint32_t>(x); };
  auto hi = [](std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); };
  std::seed_seq seq{lo(seed), hi(seed), lo(m), hi(m), lo(index), hi(index)};
  return std::mt19937_64(seq);
}

double draw(std::mt19937_64& rng, const UniformRange& r) {
  if (r.lo == r.hi) return r.lo;
  return std::uniform_real_distribution<double>(r.lo, r.hi)(rng);
}

// Work items in row-major (m, instance) order.
struct Job {
  std::size_t row;
  std::size_t m;
  std::uint64_t index;
};

std::vector<Job> jobs_for(const ScenarioConfig& config,
                          std::vector<std::size_t>& row_m) {
  row_m.clear();
  if (config.fixed_pool) {
    row_m.push_back(config.fixed_pool->size());
  } else {
    row_m = config.m_values;
  }
  std::vector<Job> jobs;
  jobs.reserve(row_m.size() * config.instances);
  for (std::size_t r = 0; r < row_m.size(); ++r) {
    for (std::uint64_t i = 0; i < config.instances; ++i) {
      jobs.push_back(Job{r, row_m[r], i});
    }
  }
  return jobs;
}

InstanceRecord run_job(const ScenarioConfig& config, const Job& job) {
  if (config.fixed_pool) return run_instance(*config.fixed_pool, config);
  return run_instance(sample_instance(config, job.m, job.index), config);
}

SweepSummary reduce(const ScenarioConfig& config,
                    const std::vector<std::size_t>& row_m,
                    const std::vector<InstanceRecord>& records) {
  SweepSummary summary;
  for (std::size_t r = 0; r < row_m.size(); ++r) {
    const std::span<const InstanceRecord> slice(
        records.data() + r * config.instances, config.instances);
    summary.rows.push_back(summarize(row_m[r], slice));
  }
  return summary;
}

}  // namespace

void validate_config(const ScenarioConfig& config) {
  if (config.instances == 0) {
    throw std::invalid_argument("instances must be positive");
  }
  if (!(config.supply_total >= 0.0)) {
    throw std::invalid_argument("supply.total must be non-negative");
  }
  check_range(config.value_dist, "value_dist");
  check_range(config.budget_dist, "budget_dist");
  check_range(config.rho_dist, "rho_dist");
  if (config.value_dist.lo < 0.0) {
    throw std::invalid_argument("value_dist: values must be non-negative");
  }
  if (config.budget_dist.lo < 0.0) {
    throw std::invalid_argument("budget_dist: budgets must be non-negative");
  }
  if (config.rho_dist.lo < 0.0 || config.rho_dist.hi > 1.0) {
    throw std::invalid_argument("rho_dist: discounts must lie in [0,1]");
  }
  if (const auto* fixed = std::get_if<FixedSplit>(&config.split)) {
    if (!(fixed->n1_fraction >= 0.0 && fixed->n1_fraction <= 1.0)) {
      throw std::invalid_argument("split.n1_fraction must lie in [0,1]");
    }
  } else {
    const auto& h = std::get<HotellingSplit>(config.split);
    if (!(h.zeta >= 0.0 && h.zeta <= 1.0)) {
      throw std::invalid_argument("split.zeta must lie in [0,1]");
    }
    if (!(h.search_payoff > 0.0)) {
      throw std::invalid_argument("split.q must be positive");
    }
  }
  if (config.fixed_pool && !validate_pool(*config.fixed_pool).ok()) {
    throw std::invalid_argument("advertisers: invalid pool");
  }
}

std::pair<double, double> engine_supplies(const ScenarioConfig& config) {
  const double s = config.supply_total;
  if (const auto* fixed = std::get_if<FixedSplit>(&config.split)) {
    return {s * fixed->n1_fraction, s * (1.0 - fixed->n1_fraction)};
  }
  const auto& h = std::get<HotellingSplit>(config.split);
  const ShareSplit shares = equilibrium_shares(h.zeta, h.search_payoff, s);
  return {shares.s1, shares.s2};
}

AdvertiserPool sample_instance(const ScenarioConfig& config, std::size_t m,
                               std::uint64_t instance_index) {
  std::mt19937_64 rng = instance_rng(config.seed, m, instance_index);
  std::vector<Advertiser> ads;
  ads.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Advertiser ad;
    ad.id = AdvertiserId{static_cast<std::uint32_t>(i)};
    ad.value = draw(rng, config.value_dist);
    ad.budget = draw(rng, config.budget_dist);
    ad.discount = draw(rng, config.rho_dist);
    ads.push_back(ad);
  }
  return AdvertiserPool::FromAdvertisers(ads);
}

InstanceRecord run_instance(const AdvertiserPool& pool,
                            const ScenarioConfig& config) {
  InstanceRecord rec;
  try {
    const double cutoff =
        config.fixed_pool ? mean_discount(pool) : config.rho_dist.mean();
    const auto [s1, s2] = engine_supplies(config);

    const MonopolyOutcome mono =
        solve_monopoly(pool, Supply{config.supply_total});
    rec.p_mono = mono.price;
    rec.r_mono = mono.revenue;
    rec.utility_mono = mono.advertiser_utility;
    rec.brand_utility_mono = brand_utility(pool, mono, cutoff);
    rec.welfare_mono = mono.social_welfare;

    const DuopolyEquilibrium eq = solve_equilibrium(pool, s1, s2);
    const DuopolyMetrics metrics = duopoly_metrics(eq, pool, cutoff);
    rec.kind = eq.kind;
    rec.p1 = eq.p1;
    rec.p2 = eq.p2;
    rec.r1 = metrics.r1;
    rec.r2 = metrics.r2;
    rec.utility_duo = metrics.utility;
    rec.brand_utility_duo = metrics.brand_utility;
    rec.welfare_duo = metrics.welfare();
    if (eq.partition.split) {
      for (const auto& e : pool.entries()) {
        if (e.advertiser.id == eq.partition.split->advertiser) {
          rec.rho_star = e.advertiser.discount;
        }
      }
    } else if (std::isfinite(eq.ratio)) {
      rec.rho_star = eq.ratio;
    }
  } catch (const SolverError&) {
    rec = InstanceRecord{};
    rec.ok = false;
  }
  return rec;
}

SweepRow summarize(std::size_t m, std::span<const InstanceRecord> records) {
  SweepRow row;
  row.m = m;
  row.instances = records.size();
  std::size_t splits = 0;
  for (const auto& rec : records) {
    if (!rec.ok) {
      ++row.failures;
      continue;
    }
    row.p1 += rec.p1;
    row.p2 += rec.p2;
    row.p_mono += rec.p_mono;
    row.r1 += rec.r1;
    row.r2 += rec.r2;
    row.r_mono += rec.r_mono;
    row.utility_duo += rec.utility_duo;
    row.utility_mono += rec.utility_mono;
    row.brand_utility_duo += rec.brand_utility_duo;
    row.brand_utility_mono += rec.brand_utility_mono;
    row.welfare_duo += rec.welfare_duo;
    row.welfare_mono += rec.welfare_mono;
    row.rho_star += rec.rho_star;
    if (rec.kind == EquilibriumKind::kSplit) ++splits;
  }
  const std::size_t ok = row.instances - row.failures;
  if (ok == 0) return row;
  const double n = static_cast<double>(ok);
  for (double* field :
       {&row.p1, &row.p2, &row.p_mono, &row.r1, &row.r2, &row.r_mono,
        &row.utility_duo, &row.utility_mono, &row.brand_utility_duo,
        &row.brand_utility_mono, &row.welfare_duo, &row.welfare_mono,
        &row.rho_star}) {
    *field /= n;
  }
  row.r_duo = row.r1 + row.r2;
  row.split_rate = static_cast<double>(splits) / n;
  return row;
}

SweepSummary run_sweep_serial(const ScenarioConfig& config) {
  validate_config(config);
  std::vector<std::size_t> row_m;
  const std::vector<Job> jobs = jobs_for(config, row_m);
  std::vector<InstanceRecord> records;
  records.reserve(jobs.size());
  for (const Job& job : jobs) records.push_back(run_job(config, job));
  return reduce(config, row_m, records);
}

SweepSummary run_sweep(const ScenarioConfig& config, int threads) {
  validate_config(config);
  std::vector<std::size_t> row_m;
  const std::vector<Job> jobs = jobs_for(config, row_m);
  std::vector<InstanceRecord> records(jobs.size());
  const int workers = threads > 0 ? threads : omp_get_max_threads();
  const auto count = static_cast<std::ptrdiff_t>(jobs.size());

#pragma omp parallel for schedule(dynamic, 64) num_threads(workers)
  for (std::ptrdiff_t j = 0; j < count; ++j) {
    records[j] = run_job(config, jobs[j]);
  }
  return reduce(config, row_m, records);
}

}  // namespace adclear
