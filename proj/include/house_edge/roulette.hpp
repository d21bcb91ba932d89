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

#ifndef HOUSE_EDGE_ROULETTE_HPP_
#define HOUSE_EDGE_ROULETTE_HPP_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "house_edge/rational.hpp"
#include "house_edge/wager.hpp"

namespace house_edge::roulette {

// American wheel pockets: 0..36, with 00 stored as 37.
inline constexpr int kDoubleZero = 37;
inline constexpr int kPockets = 38;

int parse_pocket(std::string_view text);
std::string pocket_name(int pocket);

struct RouletteBet {
  std::set<int> numbers;
  Rational size{1};
};

// Validates the subset: sizes 1,2,3,4,6,12,18,24, or exactly {0,00,1,2,3}.
RouletteBet make_bet(std::set<int> numbers, Rational size = Rational(1));
// Outside bets by name: red, black, even, odd, low, high, col1-3, dozen1-3.
RouletteBet named_bet(std::string_view name, Rational size = Rational(1));

bool is_red(int pocket);

// House payoff odds "X to 1": 36/m - 1, except 6 for the five-number bet.
Rational payoff_odds(const RouletteBet& b);

// Net payoff of the bet when the ball lands in `pocket`.
Rational spin_payoff(const RouletteBet& b, int pocket);

PayoffDistribution bet_distribution(const RouletteBet& b);

// Distribution of the combined profit of simultaneous bets, by enumerating
// all 38 pockets.
PayoffDistribution portfolio_distribution(const std::vector<RouletteBet>& bets);

// |A| single-number bets of size size/|A|. The five-number bet is allowed.
std::vector<RouletteBet> decompose(const RouletteBet& b);

// Payoff when the bet is paid at the fair odds 36/|A| - 1.
Rational fair_spin_payoff(const RouletteBet& b, int pocket);

// Critical frequency n/36 + c*sqrt(n) for the most frequent number in n spins.
Approx biased_wheel_critical(long spins, const Rational& c, int digits = 50);
// The n/38 + c*sqrt(n) variant.
Approx biased_wheel_critical_38(long spins, const Rational& c, int digits = 50);

// Named c presets: ethier_05, ethier_20, epstein_05, epstein_20.
const std::map<std::string, Rational>& bias_presets();

struct BiasVerdict {
  Approx critical;
  bool favorable = false;
  std::string caveat;
};

BiasVerdict bias_test(long spins, long top_count, const Rational& c, bool use_38 = false);

}  // namespace house_edge::roulette

#endif  // HOUSE_EDGE_ROULETTE_HPP_
