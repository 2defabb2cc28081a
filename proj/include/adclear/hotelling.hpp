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

// User market on the unit circle. The leader sits at 0 and offers payoff q;
// the follower sits at x2 and offers zeta*q. Users at address t pay a
// quadratic transport cost to their engine.

#ifndef ADCLEAR_HOTELLING_HPP_
#define ADCLEAR_HOTELLING_HPP_

#include <utility>

namespace adclear {

struct UserMarket {
  double zeta = 1.0;            // follower quality factor in [0, 1]
  double search_payoff = 0.0;   // q > 0
  double follower_location = 0.5;  // x2 in (0, 1)
};

struct ShareSplit {
  double n1 = 0.5;
  double n2 = 0.5;
  double s1 = 0.0;
  double s2 = 0.0;
};

// Addresses where users are indifferent between the two engines, on either
// side of the follower. Throws std::invalid_argument unless 0 < x2 < 1.
std::pair<double, double> indifference_points(const UserMarket& market);

// Follower share xi2 - xi1, clamped to [0, 1/2].
double share_of_follower(const UserMarket& market);

// Share-maximizing follower location.
double optimal_location();

// Shares and supplies with the follower at the optimal location.
ShareSplit equilibrium_shares(double zeta, double search_payoff,
                              double supply);

}  // namespace adclear

#endif  // ADCLEAR_HOTELLING_HPP_
