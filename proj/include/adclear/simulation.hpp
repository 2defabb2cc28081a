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

// Monte Carlo comparison of monopoly and duopoly outcomes over random
// advertiser populations.
//
// Every instance draws from its own generator seeded by (seed, m, index), and
// per-m means are reduced in instance order, so run_sweep returns the same
// bits as run_sweep_serial at any thread count.

#ifndef ADCLEAR_SIMULATION_HPP_
#define ADCLEAR_SIMULATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "adclear/duopoly.hpp"
#include "adclear/model.hpp"

namespace adclear {

struct UniformRange {
  double lo = 0.0;
  double hi = 1.0;
  double mean() const { return 0.5 * (lo + hi); }
};

struct FixedSplit {
  double n1_fraction = 0.5;
};

struct HotellingSplit {
  double zeta = 1.0;
  double search_payoff = 0.0;
};

using SupplySplit = std::variant<FixedSplit, HotellingSplit>;

struct ScenarioConfig {
  std::uint64_t seed = 0;
  std::size_t instances = 5000;
  std::vector<std::size_t> m_values = {1, 2,  3,  4,  5,  6,  7, 8,
                                       9, 10, 11, 12, 13, 14, 15};
  double supply_total = 1.0;
  SupplySplit split = FixedSplit{0.5};
  UniformRange value_dist{18.0, 20.0};
  UniformRange budget_dist{2.0, 6.0};
  UniformRange rho_dist{0.5, 0.9};
  // When set, every instance uses this pool instead of sampling, and the
  // sweep has a single row with m = pool size.
  std::optional<AdvertiserPool> fixed_pool;
};

// Throws std::invalid_argument describing the first bad field.
void validate_config(const ScenarioConfig& config);

// (S1, S2) for the configured split of supply_total.
std::pair<double, double> engine_supplies(const ScenarioConfig& config);

AdvertiserPool sample_instance(const ScenarioConfig& config, std::size_t m,
                               std::uint64_t instance_index);

struct InstanceRecord {
  bool ok = true;
  EquilibriumKind kind = EquilibriumKind::kDegenerateZero;
  double p1 = 0.0;
  double p2 = 0.0;
  double p_mono = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double r_mono = 0.0;
  double utility_duo = 0.0;
  double utility_mono = 0.0;
  double brand_utility_duo = 0.0;
  double brand_utility_mono = 0.0;
  double welfare_duo = 0.0;
  double welfare_mono = 0.0;
  // Split advertiser's discount, or the equilibrium price ratio.
  double rho_star = 0.0;
};

// Monopoly over the whole supply with undiscounted values, against the
// duopoly equilibrium at engine_supplies(config). Solver errors are caught
// and reported through ok = false.
InstanceRecord run_instance(const AdvertiserPool& pool,
                            const ScenarioConfig& config);

struct SweepRow {
  std::size_t m = 0;
  std::size_t instances = 0;
  std::size_t failures = 0;
  double p1 = 0.0;
  double p2 = 0.0;
  double p_mono = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double r_duo = 0.0;
  double r_mono = 0.0;
  double utility_duo = 0.0;
  double utility_mono = 0.0;
  double brand_utility_duo = 0.0;
  double brand_utility_mono = 0.0;
  double welfare_duo = 0.0;
  double welfare_mono = 0.0;
  double split_rate = 0.0;
  double rho_star = 0.0;
};

struct SweepSummary {
  std::vector<SweepRow> rows;
};

// Means over successful records, in record order.
SweepRow summarize(std::size_t m, std::span<const InstanceRecord> records);

// Reference implementation: one instance after another.
SweepSummary run_sweep_serial(const ScenarioConfig& config);

// OpenMP over all (m, instance) pairs. threads <= 0 uses the runtime
// default.
SweepSummary run_sweep(const ScenarioConfig& config, int threads = 0);

}  // namespace adclear

#endif  // ADCLEAR_SIMULATION_HPP_
