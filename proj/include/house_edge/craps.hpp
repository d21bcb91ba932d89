// Copyright 2026 The house-edge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOUSE_EDGE_CRAPS_HPP_
#define HOUSE_EDGE_CRAPS_HPP_

#include <array>
#include <map>
#include <vector>

#include "house_edge/matrix.hpp"
#include "house_edge/rational.hpp"
#include "house_edge/wager.hpp"

namespace house_edge::craps {

// P(total = j) for two fair dice, j in 2..12.
Rational dice(int total);
const std::array<int, 6>& points();

// pi_j / (pi_j + pi_7).
Rational p_before_seven(int point);

struct SeriesResult {
  Rational partial;     // sum of the first `terms` terms of the geometric series
  Rational tail_bound;  // exact remainder
};
SeriesResult p_before_seven_series(int point, int terms);

PayoffDistribution pass_line();
WagerProfile dont_pass();

struct OddsResult {
  Rational ev;
  Rational expected_total_bet;
  Rational ha;
};
OddsResult pass_with_odds(const Rational& m);
// Pass line plus m-times free odds, enumerated over come-out and point outcomes.
PayoffDistribution pass_with_odds_distribution(const Rational& m);

// States: 0 comeout, 1 point 4/10, 2 point 5/9, 3 point 6/8, 4 sevened out.
enum ShooterState { kComeout = 0, kPoint4or10, kPoint5or9, kPoint6or8, kSevenedOut };
RationalMatrix shooter_chain();

struct HandLength {
  std::vector<Rational> pmf;  // pmf[k-1] = P(length = k) for k = 1..n-1
  Rational survival;          // P(length >= n)
  Rational mean;
};
HandLength hand_length(int n);

// Expected rolls per pass-line decision.
Rational decision_duration_mean();

// Distribution of the number of distinct points made in one shooter's hand,
// indexed 0..6.
std::array<Rational, 7> fire_distinct_points();
// Paytable keys 0..6 give the net payoff; missing keys lose the unit stake.
PayoffDistribution fire_bet(const std::map<int, Rational>& paytable);
std::map<int, Rational> default_fire_paytable();

}  // namespace house_edge::craps

#endif  // HOUSE_EDGE_CRAPS_HPP_
