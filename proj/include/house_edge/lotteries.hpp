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

#ifndef HOUSE_EDGE_LOTTERIES_HPP_
#define HOUSE_EDGE_LOTTERIES_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "house_edge/rational.hpp"

namespace house_edge::lotteries {

struct KenoTicket {
  int spots = 1;
  int catches = 0;
  int pool = 80;
  int drawn = 20;
};

// C(spots,k) C(pool-spots, drawn-k) / C(pool, drawn).
Rational keno_catch_player_form(const KenoTicket& t);
// C(drawn,k) C(pool-drawn, spots-k) / C(pool, spots).
Rational keno_catch_drawn_form(const KenoTicket& t);
// Both forms, checked equal.
Rational keno_catch(const KenoTicket& t);
Rational keno_catch(int spots, int catches);

struct WayTicket {
  int r = 1;
  int s = 1;
  int t = 1;
  int pool = 80;
  int drawn = 20;
};

BigInt way_ticket_count(const WayTicket& w);
// Expected total payout: C(r,t) times the single st-spot expectation.
// `paytable` maps catches to payout per unit bet.
Rational way_ticket_ev(const WayTicket& w, const std::map<int, Rational>& paytable, const Rational& unit);
// Exact expectation by listing every draw; small pools only.
Rational way_ticket_ev_brute_force(const WayTicket& w, const std::map<int, Rational>& paytable,
                                   const Rational& unit);

struct WaySimulation {
  std::uint64_t trials = 0;
  double mean = 0;
  double sd = 0;
  std::map<double, std::uint64_t> histogram;  // total payout -> count
};
WaySimulation way_ticket_simulate(const WayTicket& w, const std::map<int, Rational>& paytable,
                                  const Rational& unit, std::uint64_t trials, std::uint64_t seed);

enum class LottoCategory { k6of6, k5of6Bonus, k5of6NoBonus, k4of6, k3of6, k2of6Bonus };
const std::vector<LottoCategory>& lotto_categories();
std::string lotto_category_name(LottoCategory c);

// Canada Lotto 6/49: six picks, six numbers plus one bonus drawn from 49.
std::map<LottoCategory, Rational> lotto_649_categories();
// Trinomial form C(6,i) C(1,j) C(42,6-i-j) / C(49,6) summed over the category.
std::map<LottoCategory, Rational> lotto_649_trinomial();
// Counted directly from simple binomial products.
std::map<LottoCategory, Rational> lotto_649_simple();

Rational parimutuel_share(const Rational& pool, long winners);

}  // namespace house_edge::lotteries

#endif  // HOUSE_EDGE_LOTTERIES_HPP_
