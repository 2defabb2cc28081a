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

#include "adclear/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace adclear {

namespace {

template <typename Key>
std::vector<std::size_t> stable_order(std::span<const PoolEntry> entries,
                                      Key key) {
  std::vector<std::size_t> order(entries.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return key(entries[a]) < key(entries[b]);
                   });
  return order;
}

}  // namespace

AdvertiserPool::AdvertiserPool(std::vector<PoolEntry> entries)
    : entries_(std::move(entries)) {}

AdvertiserPool AdvertiserPool::FromAdvertisers(
    std::span<const Advertiser> ads) {
  std::vector<PoolEntry> entries;
  entries.reserve(ads.size());
  for (const auto& ad : ads) entries.push_back(PoolEntry{ad, 1.0});
  return AdvertiserPool(std::move(entries));
}

AdvertiserPool AdvertiserPool::FromParams(std::span<const Params> params) {
  std::vector<PoolEntry> entries;
  entries.reserve(params.size());
  std::uint32_t next = 0;
  for (const auto& p : params) {
    entries.push_back(
        PoolEntry{Advertiser{AdvertiserId{next++}, p.value, p.budget,
                             p.discount},
                  1.0});
  }
  return AdvertiserPool(std::move(entries));
}

std::vector<std::size_t> AdvertiserPool::value_order() const {
  return stable_order(entries_,
                      [](const PoolEntry& e) { return e.advertiser.value; });
}

std::vector<std::size_t> AdvertiserPool::discount_order() const {
  return stable_order(
      entries_, [](const PoolEntry& e) { return e.advertiser.discount; });
}

AdvertiserPool AdvertiserPool::select(
    std::span<const std::size_t> indices) const {
  std::vector<PoolEntry> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(entries_.at(i));
  return AdvertiserPool(std::move(out));
}

double AdvertiserPool::total_effective_budget() const {
  double total = 0.0;
  for (const auto& e : entries_) total += e.effective_budget();
  return total;
}

ValidationResult validate_pool(const AdvertiserPool& pool) {
  ValidationResult result;
  std::set<AdvertiserId> seen;
  for (const auto& e : pool.entries()) {
    const Advertiser& ad = e.advertiser;
    auto report = [&](std::string msg) {
      result.violations.push_back(Violation{ad.id, std::move(msg)});
    };
    if (!seen.insert(ad.id).second) report("duplicate id");
    if (!std::isfinite(ad.value)) {
      report("non-finite value");
    } else if (ad.value < 0.0) {
      report("negative value");
    }
    if (!std::isfinite(ad.budget)) {
      report("non-finite budget");
    } else if (ad.budget < 0.0) {
      report("negative budget");
    }
    if (!(ad.discount >= 0.0 && ad.discount <= 1.0)) {
      report("discount outside [0,1]");
    }
    if (!(e.budget_fraction >= 0.0 && e.budget_fraction <= 1.0)) {
      report("budget fraction outside [0,1]");
    }
  }
  return result;
}

AdvertiserPool effective_pool(const AdvertiserPool& pool, Engine engine) {
  if (engine == Engine::kLeader) return pool;
  std::vector<PoolEntry> out(pool.entries().begin(), pool.entries().end());
  for (auto& e : out) e.advertiser.value *= e.advertiser.discount;
  return AdvertiserPool(std::move(out));
}

}  // namespace adclear
