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

#include <cmath>
#include <random>
#include <stdexcept>

#include "adclear/exante.hpp"
#include "doctest.h"

namespace adclear {
namespace {

ExAnteMarket uniform_market(std::size_t m, double eb, double lo, double hi,
                            double s) {
  return ExAnteMarket{m, eb, ValueDistribution::Uniform(lo, hi), Supply{s}};
}

TEST_CASE("uniform cdf") {
  const auto d = ValueDistribution::Uniform(18, 20);
  CHECK(d.cdf(10) == 0.0);
  CHECK(d.cdf(18) == 0.0);
  CHECK(d.cdf(19) == doctest::Approx(0.5));
  CHECK(d.cdf(20) == 1.0);
  CHECK(d.cdf(25) == 1.0);
  CHECK(d.is_uniform());
  CHECK_THROWS_AS(ValueDistribution::Uniform(2, 1), std::invalid_argument);
}

TEST_CASE("custom cdf is clamped to its support") {
  const auto d = ValueDistribution::Custom(
      0, 1, [](double v) { return v * v; });
  CHECK_FALSE(d.is_uniform());
  CHECK(d.cdf(-1) == 0.0);
  CHECK(d.cdf(0.5) == doctest::Approx(0.25));
  CHECK(d.cdf(1) == 1.0);
}

TEST_CASE("expected_demand") {
  CHECK(expected_demand(uniform_market(5, 4, 18, 20, 1), 10) ==
        doctest::Approx(2.0));
  CHECK(expected_demand(uniform_market(5, 4, 18, 20, 1), 20) == 0.0);
  CHECK(expected_demand(uniform_market(5, 4, 18, 20, 1), 30) == 0.0);
  CHECK(expected_demand(uniform_market(0, 4, 18, 20, 1), 10) == 0.0);
  CHECK_THROWS_WITH_AS(expected_demand(uniform_market(5, 4, 18, 20, 1), 0),
                       "demand undefined at non-positive price", SolverError);
}

TEST_CASE("spend is non-increasing in price") {
  const auto market = uniform_market(7, 3, 2, 9, 1);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.01, 12.0);
  for (int i = 0; i < 1000; ++i) {
    double a = u(rng);
    double b = u(rng);
    if (a > b) std::swap(a, b);
    CHECK(a * expected_demand(market, a) >=
          b * expected_demand(market, b) - 1e-12);
  }
}

TEST_CASE("clearing price on the reference market") {
  const double expected = 200.0 / 11.0;
  CHECK(clearing_price_numeric(uniform_market(5, 4, 18, 20, 1)) ==
        doctest::Approx(expected).epsilon(1e-10));
  const auto closed = clearing_price_uniform(5, 4, 18, 20, 1);
  CHECK(std::fabs(closed.price - expected) <= 1e-12);
  CHECK_FALSE(closed.degenerate);
  CHECK_FALSE(closed.below_support);
}

TEST_CASE("clearing price limits") {
  SUBCASE("huge supply falls to the bottom of the support or below") {
    const double p = clearing_price_numeric(uniform_market(5, 4, 18, 20, 1e9));
    CHECK(p <= 18 + kTolerance);
    const auto closed = clearing_price_uniform(5, 4, 18, 20, 1e9);
    CHECK(closed.below_support);
    CHECK(closed.price == doctest::Approx(p));
  }
  SUBCASE("vanishing supply approaches the top of the support") {
    CHECK(clearing_price_uniform(5, 4, 18, 20, 1e-12).price ==
          doctest::Approx(20.0));
  }
  SUBCASE("no demand mass") {
    CHECK(clearing_price_numeric(uniform_market(0, 4, 18, 20, 1)) == 0.0);
    CHECK(clearing_price_numeric(uniform_market(5, 0, 18, 20, 1)) == 0.0);
    CHECK(clearing_price_uniform(0, 4, 18, 20, 1).price == 0.0);
  }
  SUBCASE("point mass") {
    const auto high = clearing_price_uniform(5, 4, 19, 19, 1);
    CHECK(high.degenerate);
    CHECK(high.price == 19.0);
    const auto low = clearing_price_uniform(1, 4, 19, 19, 1);
    CHECK(low.price == 4.0);
  }
  SUBCASE("no supply") {
    CHECK_THROWS_AS(clearing_price_numeric(uniform_market(5, 4, 18, 20, 0)),
                    SolverError);
    CHECK_THROWS_AS(clearing_price_uniform(5, 4, 18, 20, 0), SolverError);
  }
}

TEST_CASE("closed form matches bisection") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> m(1, 30);
  std::uniform_real_distribution<double> eb(0.1, 10.0);
  std::uniform_real_distribution<double> lo(0.0, 20.0);
  std::uniform_real_distribution<double> width(0.01, 10.0);
  std::uniform_real_distribution<double> s(0.1, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = m(rng);
    const double b = eb(rng);
    const double l = lo(rng);
    const double h = l + width(rng);
    const double supply = s(rng);
    const auto closed = clearing_price_uniform(n, b, l, h, supply);
    const double numeric = clearing_price_numeric(uniform_market(n, b, l, h, supply));
    CHECK(std::fabs(closed.price - numeric) <= 1e-8);
  }
}

TEST_CASE("numeric solver handles a non-uniform distribution") {
  // F(v) = v^2 on [0, 1]; m*E(B) = 1, S = 1: p = 1 - p^2.
  const ExAnteMarket market{
      1, 1.0, ValueDistribution::Custom(0, 1, [](double v) { return v * v; }),
      Supply{1.0}};
  const double root = (std::sqrt(5.0) - 1.0) / 2.0;
  CHECK(clearing_price_numeric(market) == doctest::Approx(root).epsilon(1e-9));
}

TEST_CASE("comparative statics on grids") {
  for (double s : {0.5, 1.0, 2.0}) {
    double previous = 0.0;
    for (std::size_t m = 1; m <= 20; ++m) {
      const double p = clearing_price_numeric(uniform_market(m, 4, 18, 20, s));
      CHECK(p >= previous - kTolerance);
      previous = p;
    }
  }
  double previous = 0.0;
  for (int i = 1; i <= 20; ++i) {
    const double p =
        clearing_price_numeric(uniform_market(5, 0.5 * i, 18, 20, 1));
    CHECK(p >= previous - kTolerance);
    previous = p;
  }
  previous = 1e300;
  for (int i = 1; i <= 20; ++i) {
    const double p =
        clearing_price_numeric(uniform_market(5, 4, 18, 20, 0.25 * i));
    CHECK(p <= previous + kTolerance);
    previous = p;
  }
}

}  // namespace
}  // namespace adclear
