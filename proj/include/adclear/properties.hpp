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

// Randomized property checks over the monopoly and duopoly solvers.

#ifndef ADCLEAR_PROPERTIES_HPP_
#define ADCLEAR_PROPERTIES_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "adclear/model.hpp"

namespace adclear {

struct PropertyCount {
  std::string name;
  std::size_t checks = 0;
  std::size_t violations = 0;
};

struct VerifyReport {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<PropertyCount> properties;

  std::size_t total_violations() const;
  bool ok() const { return total_violations() == 0; }
};

// Random pool with m advertisers: values in [0, 10], budgets in [0, 5],
// discounts in [0, 1]. Roughly a quarter of pools snap values, and
// separately discounts, to a coarse grid so that ties occur; a few budgets
// are zeroed.
AdvertiserPool random_pool(std::mt19937_64& rng, std::size_t m);

// Runs every property on `trials` random instances. Throws
// std::invalid_argument when trials is 0.
VerifyReport verify_suite(std::size_t trials, std::uint64_t seed);

void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace adclear

#endif  // ADCLEAR_PROPERTIES_HPP_
