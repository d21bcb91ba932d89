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

#include "house_edge/craps.hpp"

#include <bit>
#include <cstdlib>

#include "house_edge/error.hpp"

namespace house_edge::craps {

Rational dice(int total) {
  if (total < 2 || total > 12) return Rational(0);
  return Rational(6 - std::abs(total - 7), 36);
}

const std::array<int, 6>& points() {
  static constexpr std::array<int, 6> kPoints{4, 5, 6, 8, 9, 10};
  return kPoints;
}

namespace {

void check_point(int j) {
  for (int p : points()) {
    if (p == j) return;
  }
  throw Error(ErrorCode::kInvalidPoint, std::to_string(j) + " is not a point number");
}

}  // namespace

Rational p_before_seven(int point) {
  check_point(point);
  return dice(point) / (dice(point) + dice(7));
}

SeriesResult p_before_seven_series(int point, int terms) {
  check_point(point);
  if (terms < 0) throw Error(ErrorCode::kInvalidParameters, "terms must be non-negative");
  const Rational neither = Rational(1) - dice(point) - dice(7);
  SeriesResult r;
  Rational power(1);
  for (int k = 0; k < terms; ++k) {
    r.partial += power * dice(point);
    power *= neither;
  }
  r.tail_bound = power * dice(point) / (dice(point) + dice(7));
  return r;
}

PayoffDistribution pass_line() {
  Rational win = dice(7) + dice(11);
  for (int p : points()) win += dice(p) * p_before_seven(p);
  return PayoffDistribution({{Rational(1), win}, {Rational(-1), Rational(1) - win}}, "pass line");
}

WagerProfile dont_pass() {
  Rational win = dice(2) + dice(3);
  Rational lose = dice(7) + dice(11);
  for (int p : points()) {
    win += dice(p) * (Rational(1) - p_before_seven(p));
    lose += dice(p) * p_before_seven(p);
  }
  const Rational push = dice(12);
  PayoffDistribution d({{Rational(1), win}, {Rational(-1), lose}, {Rational(0), push}}, "don't pass");
  return WagerProfile::from_distribution(std::move(d), Rational(1), Rational(1), Rational(1), push);
}

namespace {

// True odds paid on a free-odds bet: P(seven first) / P(point first).
Rational true_odds(int p) { return dice(7) / dice(p); }

}  // namespace

PayoffDistribution pass_with_odds_distribution(const Rational& m) {
  if (m.sign() < 0) throw Error(ErrorCode::kInvalidParameters, "odds multiple must be non-negative");
  std::vector<PayoffAtom> atoms{{Rational(1), dice(7) + dice(11)}, {Rational(-1), dice(2) + dice(3) + dice(12)}};
  for (int p : points()) {
    const Rational made = p_before_seven(p);
    atoms.push_back({Rational(1) + m * true_odds(p), dice(p) * made});
    atoms.push_back({Rational(-1) - m, dice(p) * (Rational(1) - made)});
  }
  return PayoffDistribution(std::move(atoms), "pass line with odds").merged();
}

OddsResult pass_with_odds(const Rational& m) {
  if (m.sign() < 0) throw Error(ErrorCode::kInvalidParameters, "odds multiple must be non-negative");
  OddsResult r;
  r.ev = expectation(pass_line());
  Rational p_point;
  for (int p : points()) p_point += dice(p);
  r.expected_total_bet = Rational(1) + m * p_point;
  r.ha = -r.ev / r.expected_total_bet;
  return r;
}

RationalMatrix shooter_chain() {
  RationalMatrix t(5, 5);
  t(kComeout, kComeout) = dice(2) + dice(3) + dice(7) + dice(11) + dice(12);
  t(kComeout, kPoint4or10) = dice(4) + dice(10);
  t(kComeout, kPoint5or9) = dice(5) + dice(9);
  t(kComeout, kPoint6or8) = dice(6) + dice(8);
  const std::array<int, 3> reps{4, 5, 6};
  for (int s = kPoint4or10; s <= kPoint6or8; ++s) {
    const Rational hit = dice(reps[s - 1]);
    t(s, kComeout) = hit;
    t(s, kSevenedOut) = dice(7);
    t(s, s) = Rational(1) - hit - dice(7);
  }
  t(kSevenedOut, kSevenedOut) = Rational(1);
  return t;
}

HandLength hand_length(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidParameters, "n must be at least 1");
  const RationalMatrix t = shooter_chain();
  std::vector<Rational> state(5);
  state[kComeout] = Rational(1);
  HandLength h;
  for (int k = 1; k < n; ++k) {
    std::vector<Rational> next(5);
    for (int i = 0; i < kSevenedOut; ++i) {
      if (state[i].is_zero()) continue;
      for (int j = 0; j < 5; ++j) next[j] += state[i] * t(i, j);
    }
    h.pmf.push_back(next[kSevenedOut]);
    next[kSevenedOut] = Rational(0);
    state = std::move(next);
  }
  for (int i = 0; i < kSevenedOut; ++i) h.survival += state[i];

  // Expected steps to absorption: row sums of (I - Q)^{-1}.
  RationalMatrix q(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) q(i, j) = t(i, j);
  }
  const auto fundamental = (RationalMatrix::identity(4) - q).inverse();
  if (!fundamental) throw Error(ErrorCode::kUnreachableState, "shooter chain is not absorbing");
  for (int j = 0; j < 4; ++j) h.mean += (*fundamental)(kComeout, j);
  return h;
}

Rational decision_duration_mean() {
  Rational mean(1);
  for (int p : points()) mean += dice(p) / (dice(p) + dice(7));
  return mean;
}

std::array<Rational, 7> fire_distinct_points() {
  // Given the hand is at a come-out with `mask` made, the next point rolled is
  // p with probability w_p; it is made with r_p, else the hand ends.
  Rational point_total;
  for (int p : points()) point_total += dice(p);
  std::array<Rational, 6> w;
  std::array<Rational, 6> r;
  for (int i = 0; i < 6; ++i) {
    w[i] = dice(points()[i]) / point_total;
    r[i] = p_before_seven(points()[i]);
  }
  Rational seven_out;
  for (int i = 0; i < 6; ++i) seven_out += w[i] * (Rational(1) - r[i]);

  std::array<std::array<Rational, 7>, 64> f;
  for (int mask = 63; mask >= 0; --mask) {
    Rational stay;
    std::array<Rational, 7> acc;
    for (int i = 0; i < 6; ++i) {
      const Rational made = w[i] * r[i];
      if (mask & (1 << i)) {
        stay += made;
      } else {
        for (int k = 0; k < 7; ++k) acc[k] += made * f[mask | (1 << i)][k];
      }
    }
    acc[std::popcount(static_cast<unsigned>(mask))] += seven_out;
    const Rational scale = Rational(1) / (Rational(1) - stay);
    for (int k = 0; k < 7; ++k) f[mask][k] = acc[k] * scale;
  }
  return f[0];
}

PayoffDistribution fire_bet(const std::map<int, Rational>& paytable) {
  for (const auto& [k, pay] : paytable) {
    if (k < 0 || k > 6) throw Error(ErrorCode::kInvalidPaytable, "fire paytable keys must be 0..6");
    if (pay < Rational(-1)) throw Error(ErrorCode::kInvalidPaytable, "payoff below the stake");
  }
  const auto dist = fire_distinct_points();
  std::vector<PayoffAtom> atoms;
  for (int k = 0; k < 7; ++k) {
    auto it = paytable.find(k);
    atoms.push_back({it == paytable.end() ? Rational(-1) : it->second, dist[k]});
  }
  return PayoffDistribution(std::move(atoms), "fire bet").merged();
}

std::map<int, Rational> default_fire_paytable() {
  return {{4, Rational(24)}, {5, Rational(249)}, {6, Rational(999)}};
}

}  // namespace house_edge::craps
