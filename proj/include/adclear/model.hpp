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

// Shared domain types: advertisers, pools, supply, and the per-engine view
// of a pool.

#ifndef ADCLEAR_MODEL_HPP_
#define ADCLEAR_MODEL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace adclear {

// Absolute tolerance used by every solver comparison unless stated otherwise.
inline constexpr double kTolerance = 1e-9;

// Thrown by solvers on degenerate or inconsistent input.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AdvertiserId {
  std::uint32_t value = 0;
  friend auto operator<=>(const AdvertiserId&, const AdvertiserId&) = default;
};

struct Advertiser {
  AdvertiserId id;
  double value = 0.0;     // willingness to pay per attention
  double budget = 0.0;    // spending cap per period
  double discount = 1.0;  // value multiplier at the follower engine
};

struct PoolEntry {
  Advertiser advertiser;
  double budget_fraction = 1.0;

  double effective_budget() const {
    return budget_fraction * advertiser.budget;
  }
  double value() const { return advertiser.value; }
};

struct Supply {
  double total = 0.0;
};

enum class Engine { kLeader, kFollower };

// Ordered, immutable collection of advertisers. Sorted views return indices
// into entries(); equal keys keep input order.
class AdvertiserPool {
 public:
  AdvertiserPool() = default;
  explicit AdvertiserPool(std::vector<PoolEntry> entries);

  // Every entry gets budget_fraction 1; ids are taken as given.
  static AdvertiserPool FromAdvertisers(std::span<const Advertiser> ads);

  // Builds advertisers from (value, budget, discount) triples with ids
  // 0..n-1 in order.
  struct Params {
    double value;
    double budget;
    double discount = 1.0;
  };
  static AdvertiserPool FromParams(std::span<const Params> params);

  std::span<const PoolEntry> entries() const { return entries_; }
  const PoolEntry& operator[](std::size_t i) const { return entries_[i]; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  std::vector<std::size_t> value_order() const;
  std::vector<std::size_t> discount_order() const;

  // Subset of entries at the given indices, in the given order.
  AdvertiserPool select(std::span<const std::size_t> indices) const;

  double total_effective_budget() const;

 private:
  std::vector<PoolEntry> entries_;
};

struct Violation {
  AdvertiserId id;
  std::string message;
};

struct ValidationResult {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationResult validate_pool(const AdvertiserPool& pool);

// Leader view keeps values; follower view replaces each value by
// discount * value. Budgets, fractions and discounts are unchanged.
AdvertiserPool effective_pool(const AdvertiserPool& pool, Engine engine);

}  // namespace adclear

#endif  // ADCLEAR_MODEL_HPP_
