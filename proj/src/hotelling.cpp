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

#include "adclear/hotelling.hpp"

#include <algorithm>
#include <stdexcept>

namespace adclear {

namespace {

void check_location(double x2) {
  if (!(x2 > 0.0 && x2 < 1.0)) {
    throw std::invalid_argument("coincident locations");
  }
}

}  // namespace

std::pair<double, double> indifference_points(const UserMarket& market) {
  const double x2 = market.follower_location;
  check_location(x2);
  // Equating q - t^2 with zeta*q - (t - x2)^2 on each arc.
  const double gap = (1.0 - market.zeta) * market.search_payoff;
  const double xi1 = (gap + x2 * x2) / (2.0 * x2);
  const double xi2 = (1.0 - x2 * x2 - gap) / (2.0 * (1.0 - x2));
  return {xi1, xi2};
}

double share_of_follower(const UserMarket& market) {
  const double x2 = market.follower_location;
  check_location(x2);
  const double gap = (1.0 - market.zeta) * market.search_payoff;
  const double n2 = 0.5 * (1.0 - gap / (x2 * (1.0 - x2)));
  return std::clamp(n2, 0.0, 0.5);
}

double optimal_location() { return 0.5; }

ShareSplit equilibrium_shares(double zeta, double search_payoff,
                              double supply) {
  const double gap = (1.0 - zeta) * search_payoff;
  ShareSplit out;
  out.n1 = std::clamp(0.5 + 2.0 * gap, 0.5, 1.0);
  out.n2 = 1.0 - out.n1;
  out.s1 = supply * out.n1;
  out.s2 = supply * out.n2;
  return out;
}

}  // namespace adclear
