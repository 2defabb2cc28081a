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

#include "adclear/io.hpp"

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string_view>

namespace adclear {

using nlohmann::json;

namespace {

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

// Checks that `node` is an object whose keys are all in `allowed`.
void expect_object(const json& node, const std::string& path,
                   std::initializer_list<std::string_view> allowed) {
  if (!node.is_object()) {
    throw ConfigError((path.empty() ? std::string("document") : path) +
                      ": expected an object");
  }
  for (const auto& item : node.items()) {
    bool known = false;
    for (std::string_view k : allowed) known = known || item.key() == k;
    if (!known) {
      throw ConfigError(
          (path.empty() ? std::string("document") : path) +
          ": unknown key: " + item.key());
    }
  }
}

const json& require(const json& node, const std::string& path,
                    std::string_view key) {
  auto it = node.find(std::string(key));
  if (it == node.end()) {
    throw ConfigError("missing required key: " + join(path, key));
  }
  return *it;
}

double as_number(const json& node, const std::string& path) {
  if (!node.is_number()) throw ConfigError(path + ": expected a number");
  return node.get<double>();
}

std::uint64_t as_count(const json& node, const std::string& path) {
  if (!node.is_number_integer() || node.get<std::int64_t>() < 0) {
    throw ConfigError(path + ": expected a non-negative integer");
  }
  return node.get<std::uint64_t>();
}

double number_in(const json& node, const std::string& path, double lo,
                 double hi) {
  const double x = as_number(node, path);
  if (!(x >= lo && x <= hi)) {
    std::ostringstream msg;
    msg << path << ": out of range [" << lo << ", " << hi << "]";
    throw ConfigError(msg.str());
  }
  return x;
}

UniformRange parse_range(const json& node, const std::string& path,
                         double min_lo, double max_hi) {
  expect_object(node, path, {"lo", "hi"});
  UniformRange r;
  r.lo = number_in(require(node, path, "lo"), join(path, "lo"), min_lo,
                   max_hi);
  r.hi = number_in(require(node, path, "hi"), join(path, "hi"), min_lo,
                   max_hi);
  if (r.lo > r.hi) throw ConfigError(path + ": lo exceeds hi");
  return r;
}

SupplySplit parse_split(const json& node, const std::string& path) {
  if (!node.is_object()) throw ConfigError(path + ": expected an object");
  const json& mode = require(node, path, "mode");
  if (!mode.is_string()) {
    throw ConfigError(join(path, "mode") + ": expected a string");
  }
  const std::string name = mode.get<std::string>();
  if (name == "fixed") {
    expect_object(node, path, {"mode", "n1_fraction"});
    return FixedSplit{number_in(require(node, path, "n1_fraction"),
                                join(path, "n1_fraction"), 0.0, 1.0)};
  }
  if (name == "hotelling") {
    expect_object(node, path, {"mode", "zeta", "q"});
    HotellingSplit h;
    h.zeta = number_in(require(node, path, "zeta"), join(path, "zeta"), 0.0,
                       1.0);
    h.search_payoff = as_number(require(node, path, "q"), join(path, "q"));
    if (!(h.search_payoff > 0.0)) {
      throw ConfigError(join(path, "q") + ": must be positive");
    }
    return h;
  }
  throw ConfigError(join(path, "mode") + ": expected \"fixed\" or \"hotelling\"");
}

void parse_supply(const json& node, double& total, SupplySplit& split) {
  const std::string path = "supply";
  expect_object(node, path, {"total", "split"});
  total = as_number(require(node, path, "total"), "supply.total");
  if (!(total >= 0.0)) throw ConfigError("supply.total: must be non-negative");
  if (auto it = node.find("split"); it != node.end()) {
    split = parse_split(*it, "supply.split");
  }
}

AdvertiserPool parse_advertisers(const json& node) {
  if (!node.is_array()) throw ConfigError("advertisers: expected an array");
  std::vector<Advertiser> ads;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const std::string path = "advertisers[" + std::to_string(i) + "]";
    const json& item = node[i];
    expect_object(item, path, {"v", "B", "rho"});
    Advertiser ad;
    ad.id = AdvertiserId{static_cast<std::uint32_t>(i)};
    ad.value = as_number(require(item, path, "v"), join(path, "v"));
    ad.budget = as_number(require(item, path, "B"), join(path, "B"));
    if (auto it = item.find("rho"); it != item.end()) {
      ad.discount = as_number(*it, join(path, "rho"));
    }
    if (ad.value < 0.0) throw ConfigError(join(path, "v") + ": negative value");
    if (ad.budget < 0.0) {
      throw ConfigError(join(path, "B") + ": negative budget");
    }
    if (!(ad.discount >= 0.0 && ad.discount <= 1.0)) {
      throw ConfigError(join(path, "rho") + ": out of range [0, 1]");
    }
    ads.push_back(ad);
  }
  return AdvertiserPool::FromAdvertisers(ads);
}

// Field order of the CSV header.
struct Column {
  const char* name;
  double SweepRow::*field;
};

constexpr Column kColumns[] = {
    {"p1", &SweepRow::p1},
    {"p2", &SweepRow::p2},
    {"pM", &SweepRow::p_mono},
    {"R1", &SweepRow::r1},
    {"R2", &SweepRow::r2},
    {"R_duo", &SweepRow::r_duo},
    {"R_mono", &SweepRow::r_mono},
    {"UA_duo", &SweepRow::utility_duo},
    {"UA_mono", &SweepRow::utility_mono},
    {"UA_brand_duo", &SweepRow::brand_utility_duo},
    {"UA_brand_mono", &SweepRow::brand_utility_mono},
    {"SW_duo", &SweepRow::welfare_duo},
    {"SW_mono", &SweepRow::welfare_mono},
    {"split_rate", &SweepRow::split_rate},
};

}  // namespace

json parse_json_text(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    return json::object();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

ScenarioConfig parse_scenario(const json& doc) {
  expect_object(doc, "",
                {"seed", "instances", "m_values", "supply", "value_dist",
                 "budget_dist", "rho_dist", "advertisers"});
  ScenarioConfig config;
  parse_supply(require(doc, "", "supply"), config.supply_total, config.split);
  if (auto it = doc.find("seed"); it != doc.end()) {
    config.seed = as_count(*it, "seed");
  }
  if (auto it = doc.find("instances"); it != doc.end()) {
    config.instances = as_count(*it, "instances");
    if (config.instances == 0) throw ConfigError("instances: must be positive");
  }
  if (auto it = doc.find("m_values"); it != doc.end()) {
    if (!it->is_array() || it->empty()) {
      throw ConfigError("m_values: expected a non-empty array");
    }
    config.m_values.clear();
    for (std::size_t i = 0; i < it->size(); ++i) {
      config.m_values.push_back(
          as_count((*it)[i], "m_values[" + std::to_string(i) + "]"));
    }
  }
  if (auto it = doc.find("value_dist"); it != doc.end()) {
    config.value_dist = parse_range(*it, "value_dist", 0.0, 1e300);
  }
  if (auto it = doc.find("budget_dist"); it != doc.end()) {
    config.budget_dist = parse_range(*it, "budget_dist", 0.0, 1e300);
  }
  if (auto it = doc.find("rho_dist"); it != doc.end()) {
    config.rho_dist = parse_range(*it, "rho_dist", 0.0, 1.0);
  }
  if (auto it = doc.find("advertisers"); it != doc.end()) {
    config.fixed_pool = parse_advertisers(*it);
  }
  return config;
}

InstanceConfig parse_instance(const json& doc) {
  expect_object(doc, "", {"supply", "advertisers", "follower_location"});
  InstanceConfig config;
  parse_supply(require(doc, "", "supply"), config.supply_total, config.split);
  if (auto it = doc.find("advertisers"); it != doc.end()) {
    config.pool = parse_advertisers(*it);
  }
  if (auto it = doc.find("follower_location"); it != doc.end()) {
    config.follower_location = as_number(*it, "follower_location");
    if (!(config.follower_location > 0.0 && config.follower_location < 1.0)) {
      throw ConfigError("follower_location: out of range (0, 1)");
    }
  }
  return config;
}

ExAnteMarket parse_exante(const json& doc) {
  expect_object(doc, "", {"m", "expected_budget", "value_dist", "supply"});
  ExAnteMarket market;
  double total = 0.0;
  SupplySplit unused;
  parse_supply(require(doc, "", "supply"), total, unused);
  market.supply = Supply{total};
  market.advertisers = as_count(require(doc, "", "m"), "m");
  market.expected_budget =
      as_number(require(doc, "", "expected_budget"), "expected_budget");
  if (market.expected_budget < 0.0) {
    throw ConfigError("expected_budget: must be non-negative");
  }
  const UniformRange r =
      parse_range(require(doc, "", "value_dist"), "value_dist", 0.0, 1e300);
  market.value_dist = ValueDistribution::Uniform(r.lo, r.hi);
  return market;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw ConfigError("--format: expected csv or json");
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

void emit_summary(const SweepSummary& summary, OutputFormat format,
                  std::ostream& out) {
  if (format == OutputFormat::kCsv) {
    out << kSummaryHeader << '\n';
    for (const SweepRow& row : summary.rows) {
      out << row.m;
      for (const Column& c : kColumns) out << ',' << format_number(row.*c.field);
      out << '\n';
    }
    return;
  }
  json rows = json::array();
  for (const SweepRow& row : summary.rows) {
    json item;
    item["m"] = row.m;
    for (const Column& c : kColumns) item[c.name] = row.*c.field;
    rows.push_back(std::move(item));
  }
  out << json{{"rows", rows}}.dump(2) << '\n';
}

SweepSummary parse_summary_json(const json& doc) {
  SweepSummary summary;
  for (const json& item : doc.at("rows")) {
    SweepRow row;
    row.m = item.at("m").get<std::size_t>();
    for (const Column& c : kColumns) row.*c.field = item.at(c.name).get<double>();
    summary.rows.push_back(row);
  }
  return summary;
}

}  // namespace adclear
