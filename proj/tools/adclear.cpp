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

// adclear: market-clearing prices and duopoly equilibria for budget-limited
// advertisers.
//
// Exit codes: 0 success, 1 usage or config error, 2 property violation,
// 3 solver error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "adclear/duopoly.hpp"
#include "adclear/exante.hpp"
#include "adclear/hotelling.hpp"
#include "adclear/io.hpp"
#include "adclear/monopoly.hpp"
#include "adclear/properties.hpp"
#include "adclear/simulation.hpp"
#include "json.hpp"

namespace {

using adclear::ConfigError;
using adclear::OutputFormat;
using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitSolver = 3;

struct CommonFlags {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string format = "csv";
};

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw ConfigError(path + ": cannot open for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

// Flat key/value records: one "key,value" line each in CSV, an object in
// JSON.
void emit_record(const json& record, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kJson) {
    out << record.dump(2) << '\n';
    return;
  }
  out << "key,value\n";
  for (const auto& item : record.items()) {
    out << item.key() << ',';
    if (item.value().is_number()) {
      out << adclear::format_number(item.value().get<double>());
    } else if (item.value().is_string()) {
      out << item.value().get<std::string>();
    } else {
      out << item.value().dump();
    }
    out << '\n';
  }
}

json allocation_json(const adclear::AdvertiserPool& pool,
                     const std::vector<double>& q) {
  json out = json::array();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    out.push_back({{"id", pool[i].advertiser.id.value}, {"q", q[i]}});
  }
  return out;
}

std::pair<double, double> split_supply(const adclear::InstanceConfig& cfg) {
  adclear::ScenarioConfig sc;
  sc.supply_total = cfg.supply_total;
  sc.split = cfg.split;
  return adclear::engine_supplies(sc);
}

void require_valid(const adclear::AdvertiserPool& pool) {
  const adclear::ValidationResult v = adclear::validate_pool(pool);
  if (!v.ok()) {
    const auto& first = v.violations.front();
    throw ConfigError("advertisers[" + std::to_string(first.id.value) +
                      "]: " + first.message);
  }
}

int run_monopoly(const CommonFlags& flags) {
  const auto cfg = adclear::parse_instance(adclear::load_json_file(flags.config));
  require_valid(cfg.pool);
  const auto out = adclear::solve_monopoly(cfg.pool, {cfg.supply_total});
  json record;
  record["price"] = out.price;
  record["revenue"] = out.revenue;
  record["advertiser_utility"] = out.advertiser_utility;
  record["social_welfare"] = out.social_welfare;
  record["cleared"] = out.cleared;
  record["allocation"] = allocation_json(cfg.pool, out.allocation);
  Output sink(flags.out);
  emit_record(record, adclear::parse_format(flags.format), sink.stream());
  return 0;
}

int run_duopoly(const CommonFlags& flags) {
  const auto cfg = adclear::parse_instance(adclear::load_json_file(flags.config));
  require_valid(cfg.pool);
  const auto [s1, s2] = split_supply(cfg);
  const auto eq = adclear::solve_equilibrium(cfg.pool, s1, s2);
  const auto metrics = adclear::duopoly_metrics(eq, cfg.pool);

  json record;
  record["kind"] = adclear::to_string(eq.kind);
  record["S1"] = s1;
  record["S2"] = s2;
  record["p1"] = eq.p1;
  record["p2"] = eq.p2;
  record["ratio"] = std::isfinite(eq.ratio) ? json(eq.ratio) : json("inf");
  json engine1 = json::array();
  json engine2 = json::array();
  for (auto id : eq.partition.engine1) engine1.push_back(id.value);
  for (auto id : eq.partition.engine2) engine2.push_back(id.value);
  record["engine1"] = engine1;
  record["engine2"] = engine2;
  if (eq.partition.split) {
    record["split_id"] = eq.partition.split->advertiser.value;
    record["split_alpha"] = eq.partition.split->alpha;
  }
  record["R1"] = metrics.r1;
  record["R2"] = metrics.r2;
  record["R_duo"] = metrics.total_revenue();
  record["UA"] = metrics.utility;
  record["UA_brand"] = metrics.brand_utility;
  record["SW1"] = metrics.welfare1;
  record["SW2"] = metrics.welfare2;
  record["SW"] = metrics.welfare();
  record["verified"] = eq.kind == adclear::EquilibriumKind::kSplit ||
                       adclear::verify_ne(cfg.pool, s1, s2, eq.p1, eq.p2);
  Output sink(flags.out);
  emit_record(record, adclear::parse_format(flags.format), sink.stream());
  return 0;
}

int run_exante(const CommonFlags& flags) {
  const auto market = adclear::parse_exante(adclear::load_json_file(flags.config));
  json record;
  record["numeric_price"] = adclear::clearing_price_numeric(market);
  if (market.supply.total > 0.0) {
    const auto closed = adclear::clearing_price_uniform(
        market.advertisers, market.expected_budget, market.value_dist.lo(),
        market.value_dist.hi(), market.supply.total);
    record["closed_form_price"] = closed.price;
    record["degenerate"] = closed.degenerate;
    record["below_support"] = closed.below_support;
  }
  Output sink(flags.out);
  emit_record(record, adclear::parse_format(flags.format), sink.stream());
  return 0;
}

int run_hotelling(const CommonFlags& flags) {
  const auto cfg = adclear::parse_instance(adclear::load_json_file(flags.config));
  const auto* h = std::get_if<adclear::HotellingSplit>(&cfg.split);
  if (!h) throw ConfigError("supply.split: hotelling mode required");
  const adclear::UserMarket market{h->zeta, h->search_payoff,
                                   cfg.follower_location};
  const auto [xi1, xi2] = adclear::indifference_points(market);
  const auto shares =
      adclear::equilibrium_shares(h->zeta, h->search_payoff, cfg.supply_total);
  json record;
  record["xi1"] = xi1;
  record["xi2"] = xi2;
  record["follower_share"] = adclear::share_of_follower(market);
  record["optimal_location"] = adclear::optimal_location();
  record["n1"] = shares.n1;
  record["n2"] = shares.n2;
  record["S1"] = shares.s1;
  record["S2"] = shares.s2;
  Output sink(flags.out);
  emit_record(record, adclear::parse_format(flags.format), sink.stream());
  return 0;
}

int threads_from_env() {
  const char* raw = std::getenv("ADCLEAR_THREADS");
  if (!raw || !*raw) return 0;
  try {
    return std::max(0, std::stoi(raw));
  } catch (const std::exception&) {
    throw ConfigError("ADCLEAR_THREADS: expected an integer");
  }
}

int run_sweep(const CommonFlags& flags) {
  auto config = adclear::parse_scenario(adclear::load_json_file(flags.config));
  if (flags.seed) config.seed = *flags.seed;
  try {
    adclear::validate_config(config);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const auto format = adclear::parse_format(flags.format);
  const auto summary = adclear::run_sweep(config, threads_from_env());
  Output sink(flags.out);
  adclear::emit_summary(summary, format, sink.stream());
  return 0;
}

int run_verify(std::size_t trials, std::uint64_t seed, const std::string& out) {
  if (trials == 0) throw ConfigError("--trials: must be positive");
  const auto report = adclear::verify_suite(trials, seed);
  Output sink(out);
  adclear::print_report(report, sink.stream());
  return report.ok() ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Market-clearing prices and duopoly equilibria for "
               "budget-constrained advertisers"};
  app.require_subcommand(1, 1);

  CommonFlags flags;
  auto add_common = [&](CLI::App* cmd, bool needs_config) {
    auto* opt = cmd->add_option("--config", flags.config, "JSON input file");
    if (needs_config) opt->required();
    cmd->add_option("--out", flags.out, "Output path (default stdout)");
    cmd->add_option("--format", flags.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  auto* monopoly = app.add_subcommand("monopoly", "Solve one monopoly market");
  add_common(monopoly, true);
  auto* duopoly = app.add_subcommand("duopoly", "Solve one duopoly market");
  add_common(duopoly, true);
  auto* exante = app.add_subcommand("exante", "Ex-ante clearing price");
  add_common(exante, true);
  auto* hotelling = app.add_subcommand("hotelling", "User-market shares");
  add_common(hotelling, true);
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over m");
  add_common(sweep, true);
  std::uint64_t seed_flag = 0;
  auto* seed_opt = sweep->add_option("--seed", seed_flag,
                                     "Overrides the config seed");

  auto* verify = app.add_subcommand("verify", "Randomized property suite");
  std::size_t trials = 1000;
  std::uint64_t verify_seed = 1;
  verify->add_option("--trials", trials, "Random instances")->capture_default_str();
  verify->add_option("--seed", verify_seed, "Generator seed")->capture_default_str();
  verify->add_option("--out", flags.out, "Report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (seed_opt->count() > 0) flags.seed = seed_flag;

  try {
    if (*monopoly) return run_monopoly(flags);
    if (*duopoly) return run_duopoly(flags);
    if (*exante) return run_exante(flags);
    if (*hotelling) return run_hotelling(flags);
    if (*sweep) return run_sweep(flags);
    if (*verify) return run_verify(trials, verify_seed, flags.out);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const adclear::SolverError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kExitSolver;
  }
  return kExitUsage;
}
