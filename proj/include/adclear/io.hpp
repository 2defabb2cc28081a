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

// JSON configuration documents and sweep output.
//
// Scenario document (sweep):
//   {"seed": 7, "instances": 5000, "m_values": [1, 2, 3],
//    "supply": {"total": 1,
//               "split": {"mode": "fixed", "n1_fraction": 0.5}},
//    "value_dist": {"lo": 18, "hi": 20},
//    "budget_dist": {"lo": 2, "hi": 6},
//    "rho_dist": {"lo": 0.5, "hi": 0.9}}
// "split" may instead be {"mode": "hotelling", "zeta": 0.9, "q": 0.05}.
// An "advertisers" array fixes the pool for every instance.
//
// Instance document (monopoly, duopoly, hotelling):
//   {"supply": {...}, "advertisers": [{"v": 1, "B": 2, "rho": 1}, ...]}
//
// Ex-ante document:
//   {"m": 5, "expected_budget": 4, "value_dist": {"lo": 18, "hi": 20},
//    "supply": {"total": 1}}
//
// Unknown keys are rejected. Errors name the offending key path.

#ifndef ADCLEAR_IO_HPP_
#define ADCLEAR_IO_HPP_

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "adclear/exante.hpp"
#include "adclear/simulation.hpp"
#include "json.hpp"

namespace adclear {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads a JSON file. An empty or whitespace-only file reads as {}.
nlohmann::json load_json_file(const std::string& path);
nlohmann::json parse_json_text(const std::string& text);

ScenarioConfig parse_scenario(const nlohmann::json& doc);

struct InstanceConfig {
  double supply_total = 1.0;
  SupplySplit split = FixedSplit{0.5};
  // Hotelling follower location; only read by the hotelling command.
  double follower_location = 0.5;
  AdvertiserPool pool;
};

// "advertisers" may be omitted (empty pool); "supply" is required.
InstanceConfig parse_instance(const nlohmann::json& doc);

ExAnteMarket parse_exante(const nlohmann::json& doc);

enum class OutputFormat { kCsv, kJson };

OutputFormat parse_format(const std::string& name);

inline constexpr const char* kSummaryHeader =
    "m,p1,p2,pM,R1,R2,R_duo,R_mono,UA_duo,UA_mono,UA_brand_duo,"
    "UA_brand_mono,SW_duo,SW_mono,split_rate";

// Numbers in CSV use 9 significant digits.
void emit_summary(const SweepSummary& summary, OutputFormat format,
                  std::ostream& out);

// Inverse of the JSON form of emit_summary (only the emitted fields).
SweepSummary parse_summary_json(const nlohmann::json& doc);

// 9-significant-digit rendering used for every CSV number.
std::string format_number(double x);

}  // namespace adclear

#endif  // ADCLEAR_IO_HPP_
