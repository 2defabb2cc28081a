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
#include <stdexcept>

#include "adclear/hotelling.hpp"
#include "doctest.h"

namespace adclear {
namespace {

TEST_CASE("indifference points") {
  const auto [xi1, xi2] = indifference_points({0.9, 0.5, 0.5});
  CHECK(xi1 == doctest::Approx(0.3));
  CHECK(xi2 == doctest::Approx(0.7));

  for (double x2 : {0.2, 0.5, 0.8}) {
    const auto [a, b] = indifference_points({1.0, 3.0, x2});
    CHECK(a == doctest::Approx(x2 / 2));
    CHECK(b == doctest::Approx((1 + x2) / 2));
  }

  // Quality gap equal to x2(1 - x2): the follower's interval vanishes.
  const auto [c, d] = indifference_points({0.0, 0.25, 0.5});
  CHECK(c == doctest::Approx(d));
}

TEST_CASE("coincident locations are rejected") {
  CHECK_THROWS_WITH_AS(indifference_points({0.9, 0.5, 0.0}),
                       "coincident locations", std::invalid_argument);
  CHECK_THROWS_AS(indifference_points({0.9, 0.5, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(share_of_follower({0.9, 0.5, 0.0}), std::invalid_argument);
}

TEST_CASE("share_of_follower") {
  CHECK(share_of_follower({0.9, 0.5, 0.5}) == doctest::Approx(0.4));
  for (double x2 : {0.1, 0.5, 0.9}) {
    CHECK(share_of_follower({1.0, 2.0, x2}) == 0.5);
  }
  CHECK(share_of_follower({0.5, 0.5, 0.5}) == 0.0);
  CHECK(share_of_follower({0.0, 5.0, 0.5}) == 0.0);
}

TEST_CASE("share_of_follower is non-increasing in the quality gap") {
  for (double x2 : {0.2, 0.5, 0.7}) {
    double previous = 1.0;
    for (int i = 0; i <= 100; ++i) {
      const double zeta = 1.0 - i / 100.0;
      const double n2 = share_of_follower({zeta, 0.4, x2});
      CHECK(n2 <= previous);
      CHECK(n2 >= 0.0);
      CHECK(n2 <= 0.5);
      previous = n2;
    }
  }
}

TEST_CASE("grid argmax of the follower share is the midpoint") {
  for (double zeta : {0.5, 0.8, 0.95}) {
    for (double q : {0.1, 0.3}) {
      double best = -1.0;
      double arg = 0.0;
      for (int i = 1; i <= 99; ++i) {
        const double x2 = i / 100.0;
        const double n2 = share_of_follower({zeta, q, x2});
        if (n2 > best) {
          best = n2;
          arg = x2;
        }
      }
      if (best <= 0.0) continue;
      CHECK(std::fabs(arg - optimal_location()) <= 0.01);
    }
  }
  CHECK(optimal_location() == 0.5);
}

TEST_CASE("equilibrium shares") {
  const auto equal = equilibrium_shares(1.0, 0.7, 1.0);
  CHECK(equal.n1 == 0.5);
  CHECK(equal.n2 == 0.5);

  const auto split = equilibrium_shares(0.9, 0.5, 1.0);
  CHECK(split.n1 == doctest::Approx(0.6));
  CHECK(split.n2 == doctest::Approx(0.4));
  CHECK(split.s1 == doctest::Approx(0.6));
  CHECK(split.s2 == doctest::Approx(0.4));

  const auto extinct = equilibrium_shares(0.0, 0.25, 2.0);
  CHECK(extinct.n1 == 1.0);
  CHECK(extinct.n2 == 0.0);
  CHECK(extinct.s1 == 2.0);
  CHECK(extinct.s2 == 0.0);
}

TEST_CASE("equilibrium shares agree with the follower share at the midpoint") {
  for (int i = 0; i <= 20; ++i) {
    for (double q : {0.05, 0.2, 0.5}) {
      const double zeta = i / 20.0;
      const auto shares = equilibrium_shares(zeta, q, 3.0);
      CHECK(shares.n1 >= shares.n2);
      CHECK(shares.s1 >= shares.s2);
      CHECK(shares.n1 + shares.n2 == doctest::Approx(1.0));
      CHECK(shares.s1 + shares.s2 == doctest::Approx(3.0));
      CHECK(shares.n2 ==
            doctest::Approx(share_of_follower({zeta, q, optimal_location()})));
    }
  }
}

}  // namespace
}  // namespace adclear
