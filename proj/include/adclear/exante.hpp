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

// Ex-ante clearing price when only the distribution of values and the mean
// budget are known.

#ifndef ADCLEAR_EXANTE_HPP_
#define ADCLEAR_EXANTE_HPP_

#include <cstddef>
#include <functional>

#include "adclear/model.hpp"

namespace adclear {

class ValueDistribution {
 public:
  using Cdf = std::function<double(double)>;

  static ValueDistribution Uniform(double lo, double hi);
  // Any non-decreasing CDF with F(lo) = 0 and F(hi) = 1.
  static ValueDistribution Custom(double lo, double hi, Cdf cdf);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  bool is_uniform() const { return uniform_; }

  // Clamped to 0 below lo and 1 above hi.
  double cdf(double v) const;

 private:
  ValueDistribution(double lo, double hi, Cdf cdf, bool uniform);

  double lo_;
  double hi_;
  Cdf cdf_;
  bool uniform_;
};

struct ExAnteMarket {
  std::size_t advertisers = 0;
  double expected_budget = 0.0;
  ValueDistribution value_dist = ValueDistribution::Uniform(0.0, 1.0);
  Supply supply;
};

// m * E(B) * (1 - F(p)) / p. Throws SolverError for p <= 0.
double expected_demand(const ExAnteMarket& market, double price);

// Root of p*S = m*E(B)*(1 - F(p)) on [0, hi] by bisection.
double clearing_price_numeric(const ExAnteMarket& market);

struct UniformClearing {
  double price = 0.0;
  // lo == hi: the point-mass rule min(hi, m*E(B)/S) was used.
  bool degenerate = false;
  // The closed form fell below lo, where the uniform-CDF derivation does
  // not apply; price holds the numeric root instead.
  bool below_support = false;
};

// p = m*E(B)*hi / (m*E(B) + S*(hi - lo)) for values ~ U(lo, hi).
UniformClearing clearing_price_uniform(std::size_t advertisers,
                                       double expected_budget, double lo,
                                       double hi, double supply);

}  // namespace adclear

#endif  // ADCLEAR_EXANTE_HPP_
