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

#include "house_edge/lotteries.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "house_edge/combinatorics.hpp"
#include "house_edge/error.hpp"

namespace house_edge::lotteries {

namespace {

void check(const KenoTicket& t) {
  if (t.pool < 1 || t.drawn < 1 || t.drawn > t.pool) throw Error(ErrorCode::kInvalidTicket, "bad pool or draw size");
  if (t.spots < 1 || t.spots > 15 || t.spots > t.pool) throw Error(ErrorCode::kInvalidTicket, "spots must be 1..15");
  if (t.catches < 0 || t.catches > std::min(t.spots, t.drawn)) {
    throw Error(ErrorCode::kInvalidTicket, "catches out of range");
  }
}

void check(const WayTicket& w) {
  if (w.r < 1 || w.s < 1 || w.t < 1 || w.t > w.r || w.r * w.s > w.pool || w.s * w.t > 15 || w.drawn > w.pool) {
    throw Error(ErrorCode::kInvalidWayTicket, "way ticket needs t <= r, r*s <= pool, s*t <= 15");
  }
}

Rational ratio(const BigInt& num, const BigInt& den) { return Rational(num, den); }

}  // namespace

Rational keno_catch_player_form(const KenoTicket& t) {
  check(t);
  return ratio(binomial(t.spots, t.catches) * binomial(t.pool - t.spots, t.drawn - t.catches),
               binomial(t.pool, t.drawn));
}

Rational keno_catch_drawn_form(const KenoTicket& t) {
  check(t);
  return ratio(binomial(t.drawn, t.catches) * binomial(t.pool - t.drawn, t.spots - t.catches),
               binomial(t.pool, t.spots));
}

Rational keno_catch(const KenoTicket& t) {
  Rational a = keno_catch_player_form(t);
  if (a != keno_catch_drawn_form(t)) throw Error(ErrorCode::kInvalidTicket, "keno forms disagree");
  return a;
}

Rational keno_catch(int spots, int catches) { return keno_catch(KenoTicket{spots, catches, 80, 20}); }

BigInt way_ticket_count(const WayTicket& w) {
  check(w);
  return binomial(w.r, w.t);
}

namespace {

void check_paytable(const WayTicket& w, const std::map<int, Rational>& paytable) {
  for (const auto& [k, pay] : paytable) {
    if (k < 0 || k > w.s * w.t) throw Error(ErrorCode::kInvalidPaytable, "paytable key out of range");
    if (pay.sign() < 0) throw Error(ErrorCode::kInvalidPaytable, "negative payout");
  }
}

Rational pay(const std::map<int, Rational>& paytable, int k) {
  auto it = paytable.find(k);
  return it == paytable.end() ? Rational(0) : it->second;
}

}  // namespace

Rational way_ticket_ev(const WayTicket& w, const std::map<int, Rational>& paytable, const Rational& unit) {
  check(w);
  check_paytable(w, paytable);
  const int spots = w.s * w.t;
  Rational single;
  for (int k = 0; k <= std::min(spots, w.drawn); ++k) {
    if (spots - k > w.pool - w.drawn) continue;
    single += pay(paytable, k) * keno_catch(KenoTicket{spots, k, w.pool, w.drawn});
  }
  return Rational(binomial(w.r, w.t)) * single * unit;
}

namespace {

// Total payout of every way when group i has catches[i] drawn numbers.
Rational way_payout(const WayTicket& w, const std::vector<int>& catches, const std::map<int, Rational>& paytable) {
  Rational total;
  std::vector<bool> pick(w.r, false);
  std::fill(pick.begin(), pick.begin() + w.t, true);
  do {
    int k = 0;
    for (int i = 0; i < w.r; ++i) {
      if (pick[i]) k += catches[i];
    }
    total += pay(paytable, k);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return total;
}

}  // namespace

Rational way_ticket_ev_brute_force(const WayTicket& w, const std::map<int, Rational>& paytable,
                                   const Rational& unit) {
  check(w);
  check_paytable(w, paytable);
  if (binomial(w.pool, w.drawn) > 2000000) throw Error(ErrorCode::kInvalidParameters, "pool too large to list");
  // Numbers 0..r*s-1 are the groups; the rest are unmarked.
  std::vector<bool> drawn(w.pool, false);
  std::fill(drawn.begin(), drawn.begin() + w.drawn, true);
  Rational total;
  long draws = 0;
  do {
    std::vector<int> catches(w.r, 0);
    for (int n = 0; n < w.r * w.s; ++n) {
      if (drawn[n]) ++catches[n / w.s];
    }
    total += way_payout(w, catches, paytable);
    ++draws;
  } while (std::prev_permutation(drawn.begin(), drawn.end()));
  return total * unit / Rational(draws);
}

WaySimulation way_ticket_simulate(const WayTicket& w, const std::map<int, Rational>& paytable,
                                  const Rational& unit, std::uint64_t trials, std::uint64_t seed) {
  check(w);
  check_paytable(w, paytable);
  std::mt19937_64 rng(seed);
  std::vector<int> numbers(w.pool);
  std::iota(numbers.begin(), numbers.end(), 0);
  WaySimulation sim;
  sim.trials = trials;
  const double u = unit.to_double();
  double sum = 0;
  double sum_sq = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    // Partial Fisher-Yates for the drawn numbers.
    for (int j = 0; j < w.drawn; ++j) {
      std::uniform_int_distribution<int> pick(j, w.pool - 1);
      std::swap(numbers[j], numbers[pick(rng)]);
    }
    std::vector<int> catches(w.r, 0);
    for (int j = 0; j < w.drawn; ++j) {
      if (numbers[j] < w.r * w.s) ++catches[numbers[j] / w.s];
    }
    const double payout = way_payout(w, catches, paytable).to_double() * u;
    sum += payout;
    sum_sq += payout * payout;
    ++sim.histogram[payout];
  }
  if (trials > 0) {
    sim.mean = sum / static_cast<double>(trials);
    sim.sd = std::sqrt(std::max(0.0, sum_sq / static_cast<double>(trials) - sim.mean * sim.mean));
  }
  return sim;
}

const std::vector<LottoCategory>& lotto_categories() {
  static const std::vector<LottoCategory> kAll{LottoCategory::k6of6, LottoCategory::k5of6Bonus,
                                               LottoCategory::k5of6NoBonus, LottoCategory::k4of6,
                                               LottoCategory::k3of6, LottoCategory::k2of6Bonus};
  return kAll;
}

std::string lotto_category_name(LottoCategory c) {
  switch (c) {
    case LottoCategory::k6of6: return "6/6";
    case LottoCategory::k5of6Bonus: return "5/6+bonus";
    case LottoCategory::k5of6NoBonus: return "5/6";
    case LottoCategory::k4of6: return "4/6";
    case LottoCategory::k3of6: return "3/6";
    case LottoCategory::k2of6Bonus: return "2/6+bonus";
  }
  return "?";
}

std::map<LottoCategory, Rational> lotto_649_trinomial() {
  const BigInt total = binomial(49, 6);
  auto term = [&](int i, int j) { return Rational(binomial(6, i) * binomial(1, j) * binomial(42, 6 - i - j), total); };
  return {
      {LottoCategory::k6of6, term(6, 0)},
      {LottoCategory::k5of6Bonus, term(5, 1)},
      {LottoCategory::k5of6NoBonus, term(5, 0)},
      {LottoCategory::k4of6, term(4, 0) + term(4, 1)},
      {LottoCategory::k3of6, term(3, 0) + term(3, 1)},
      {LottoCategory::k2of6Bonus, term(2, 1)},
  };
}

std::map<LottoCategory, Rational> lotto_649_simple() {
  const BigInt total = binomial(49, 6);
  return {
      {LottoCategory::k6of6, Rational(BigInt(1), total)},
      {LottoCategory::k5of6Bonus, Rational(BigInt(6), total)},
      {LottoCategory::k5of6NoBonus, Rational(BigInt(6 * 42), total)},
      {LottoCategory::k4of6, Rational(binomial(6, 4) * binomial(43, 2), total)},
      {LottoCategory::k3of6, Rational(binomial(6, 3) * binomial(43, 3), total)},
      {LottoCategory::k2of6Bonus, Rational(binomial(6, 2) * binomial(42, 3), total)},
  };
}

std::map<LottoCategory, Rational> lotto_649_categories() {
  auto a = lotto_649_trinomial();
  if (a != lotto_649_simple()) throw Error(ErrorCode::kInvalidParameters, "lotto forms disagree");
  return a;
}

Rational parimutuel_share(const Rational& pool, long winners) {
  if (winners == 0) throw Error(ErrorCode::kNoWinners, "no winners; pool carries over");
  if (winners < 0 || pool.sign() < 0) throw Error(ErrorCode::kInvalidParameters, "negative pool or winners");
  return pool / Rational(winners);
}

}  // namespace house_edge::lotteries
