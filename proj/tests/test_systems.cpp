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


#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "house_edge/error.hpp"
#include "house_edge/matrix.hpp"
#include "house_edge/systems.hpp"

using namespace house_edge;
using namespace house_edge::systems;

namespace {

// P(reach L+W before 0) from fortune L, by solving the absorbing chain with
// pushes kept as self-loops.
Rational ruin_chain(const Rational& p, const Rational& q, int W, int L) {
  const int n = L + W;
  RationalMatrix a(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1));
  std::vector<Rational> b(static_cast<std::size_t>(n + 1));
  const Rational r = Rational(1) - p - q;
  for (int i = 0; i <= n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (i == 0 || i == n) {
      a(u, u) = Rational(1);
      b[u] = i == n ? Rational(1) : Rational(0);
      continue;
    }
    a(u, u) = Rational(1) - r;
    a(u, u + 1) = -p;
    a(u, u - 1) = -q;
  }
  return (*a.solve(b))[static_cast<std::size_t>(L)];
}

SystemConfig config(SystemKind kind) {
  SystemConfig c;
  c.kind = kind;
  if (kind == SystemKind::kLabouchere) c.initial_list = {1, 2, 3};
  return c;
}

}  // namespace

TEST_SUITE("systems") {

TEST_CASE("labouchere") {
  auto s = make_system(config(SystemKind::kLabouchere));
  CHECK(next_bet(s) == Rational(4));
  s = step(s, Outcome::kWin);
  CHECK(s.list == std::vector<std::int64_t>{2});
  CHECK(next_bet(s) == Rational(2));
  s = step(s, Outcome::kLose);
  CHECK(s.list == std::vector<std::int64_t>{2, 2});
  CHECK(next_bet(s) == Rational(4));
  s = step(s, Outcome::kWin);
  CHECK(s.stopped);
  CHECK(s.profit == 6);
  CHECK_THROWS_AS(next_bet(s), Error);

  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    auto x = make_system(config(SystemKind::kLabouchere));
    for (int k = 0; k < 40 && !x.stopped; ++k) {
      const auto before = x.list.size();
      const bool win = rng() & 1;
      x = step(x, win ? Outcome::kWin : Outcome::kLose);
      std::int64_t sum = 0;
      for (auto v : x.list) sum += v;
      CHECK(6 + x.total_lost - x.total_won == sum);
      CHECK(x.profit == 6 - sum);
      if (win) CHECK(x.list.size() + std::min<std::size_t>(2, before) == before);
      else CHECK(x.list.size() == before + 1);
    }
  }
}

TEST_CASE("fibonacci") {
  SystemConfig c = config(SystemKind::kFibonacci);
  c.fibonacci_start = 5;
  auto s = make_system(c);
  CHECK(next_bet(s) == Rational(5));
  s = step(s, Outcome::kLose);
  CHECK(next_bet(s) == Rational(8));
  s = step(s, Outcome::kWin);
  CHECK(next_bet(s) == Rational(3));
  c.fibonacci_start = 2;
  auto t = step(make_system(c), Outcome::kWin);
  CHECK(t.stopped);
  c.fibonacci_start = 1;
  c.initial_list = {1, 1, 2, 3};
  CHECK(next_bet(make_system(c)) == Rational(5));
  CHECK(fibonacci(10) == 55);
}

TEST_CASE("martingale and d'alembert") {
  auto m = make_system(config(SystemKind::kMartingale));
  for (int k = 0; k < 10; ++k) {
    CHECK(next_bet_units(m) == (std::int64_t{1} << k));
    m = step(m, Outcome::kLose);
  }
  m = step(m, Outcome::kWin);
  CHECK(m.stopped);
  CHECK(m.profit == 1);

  auto d = make_system(config(SystemKind::kDalembert));
  d = step(d, Outcome::kWin);
  CHECK(next_bet_units(d) == 1);
  d = step(d, Outcome::kLose);
  d = step(d, Outcome::kLose);
  CHECK(next_bet_units(d) == 3);
  d = step(d, Outcome::kWin);
  CHECK(next_bet_units(d) == 2);

  SystemConfig lim = config(SystemKind::kMartingale);
  lim.house_limit = 4;
  auto x = make_system(lim);
  for (int k = 0; k < 3; ++k) x = step(x, Outcome::kLose);
  CHECK_THROWS_AS(next_bet(x), Error);
  lim.limit_policy = LimitPolicy::kCap;
  auto y = make_system(lim);
  for (int k = 0; k < 3; ++k) y = step(y, Outcome::kLose);
  CHECK(next_bet_units(y) == 4);
  CHECK(rule_bet_units(y) == 8);
}

TEST_CASE("martingale closed form") {
  const Rational p(18, 38);
  CHECK(martingale_success(p, 6) == Rational(1) - Rational(20, 38).pow(6));
  SystemConfig c = config(SystemKind::kMartingale);
  c.bankroll = 63;
  const auto s = simulate(c, p, 200000, 9, 100, 1);
  const double q = martingale_success(p, 6).to_double();
  CHECK(std::abs(s.success_rate() - q) < 4 * std::sqrt(q * (1 - q) / 200000));
}

TEST_CASE("simulation is reproducible") {
  SystemConfig c = config(SystemKind::kLabouchere);
  c.bankroll = 200;
  const auto a = simulate(c, Rational(1, 2), 20000, 42, 500, 1);
  const auto b = simulate(c, Rational(1, 2), 20000, 42, 500, 3);
  CHECK(a.mean_profit == b.mean_profit);
  CHECK(a.stop_causes == b.stop_causes);
  CHECK(a.max_bet == b.max_bet);
  CHECK_THROWS_AS(simulate(c, Rational(1), 10, 1, 10), Error);
}

TEST_CASE("gambler's ruin") {
  CHECK(ruin_probability(make_ruin_problem(Rational(1, 2), Rational(1, 2), 7, 7)) == Rational(1, 2));
  const Rational p(244, 495), q(251, 495);
  const auto rp = make_ruin_problem(p, q, 10, 10);
  const Rational win = ruin_probability(rp);
  CHECK(win == ruin_chain(p, q, 10, 10));
  // De Moivre: (q/p)^fortune is a fair game.
  const Rational ratio = q / p;
  CHECK(win * ratio.pow(20) + (Rational(1) - win) == ratio.pow(10));
  for (int L = 1; L <= 6; ++L) {
    for (int W = 1; W <= 6; ++W) {
      const Rational pp(2, 5), qq(1, 2);
      const Rational with_push = ruin_probability(make_ruin_problem(pp, qq, W, L));
      CHECK(with_push == ruin_chain(pp, qq, W, L));
      const Rational renorm = pp / (pp + qq);
      CHECK(with_push == ruin_probability(make_ruin_problem(renorm, Rational(1) - renorm, W, L)));
    }
  }
}

TEST_CASE("kelly") {
  const auto k = kelly(Rational(3, 5), Rational(1));
  CHECK(k.fraction == Rational(1, 5));
  CHECK(kelly(Rational(2, 5), Rational(1)).fraction == Rational(0));
  const long double g = k.growth(k.fraction);
  CHECK(g > k.growth(Rational(3, 20)));
  CHECK(g > k.growth(Rational(1, 4)));
  CHECK(kelly(Rational(1, 3), Rational(3)).fraction == Rational(1, 9));
}

TEST_CASE("bold play") {
  const Rational p(18, 38), q(20, 38);
  CHECK(bold_play(Rational(1, 2), p) == p);
  CHECK(bold_play(Rational(1, 4), p) == p * p);
  CHECK(bold_play(Rational(3, 4), p) == p + q * p);
  CHECK(bold_play(Rational(3, 8), p) == p * (p + q * p));
  for (int k = 1; k <= 8; ++k) {
    for (int a = 1; a < (1 << k); a += 2) {
      const Rational f(a, 1 << k);
      CHECK(bold_play(f, Rational(1, 2)) == f);
    }
  }
  for (int k = 1; k <= 5; ++k) {
    const Rational f(1, 1 << k);
    const Rational flat = ruin_probability(make_ruin_problem(p, q, (1 << k) - 1, 1));
    CHECK(bold_play(f, p) >= flat);
  }
  CHECK_THROWS_AS(bold_play(Rational(1, 3), p), Error);
  CHECK_THROWS_AS(bold_play(Rational(1LL, 1LL << 41), p), Error);
}

}  // TEST_SUITE
