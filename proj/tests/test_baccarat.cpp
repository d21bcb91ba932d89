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


#include <array>
#include <functional>
#include <string>

#include "doctest.h"
#include "house_edge/baccarat.hpp"
#include "house_edge/gametheory.hpp"

using namespace house_edge;
using namespace house_edge::baccarat;

namespace {

// The Banker drawing table; column 10 is "Player stood".
const char* const kTable[8] = {
    "DDDDDDDDDDD", "DDDDDDDDDDD", "DDDDDDDDDDD", "DDDDDDDDSDD",
    "SSDDDDDDSSD", "SSSSDDDDSSD", "SSSSSSDDSSS", "SSSSSSSSSSS",
};

Rational value_prob(int v) { return v == 0 ? Rational(4, 13) : Rational(1, 13); }

// Player's expectation on the Player bet by walking the whole infinite-deck
// tree. `banker_draws(x, y)` takes y = -1 when Player stood.
Rational player_ev_oracle(int player_draw_max, const std::function<bool(int, int)>& banker_draws) {
  std::array<Rational, 10> two;
  for (int a = 0; a < 10; ++a)
    for (int c = 0; c < 10; ++c) two[static_cast<std::size_t>((a + c) % 10)] += value_prob(a) * value_prob(c);
  Rational ev;
  for (int p = 0; p < 10; ++p)
    for (int b = 0; b < 10; ++b) {
      const Rational w = two[static_cast<std::size_t>(p)] * two[static_cast<std::size_t>(b)];
      auto settle = [](int pt, int bt) { return pt > bt ? 1 : (pt < bt ? -1 : 0); };
      if (p >= 8 || b >= 8) {
        ev += w * Rational(settle(p, b));
        continue;
      }
      if (p > player_draw_max) {
        if (banker_draws(b, -1)) {
          for (int c = 0; c < 10; ++c) ev += w * value_prob(c) * Rational(settle(p, (b + c) % 10));
        } else {
          ev += w * Rational(settle(p, b));
        }
        continue;
      }
      for (int y = 0; y < 10; ++y) {
        const int pf = (p + y) % 10;
        const Rational wy = w * value_prob(y);
        if (banker_draws(b, y)) {
          for (int c = 0; c < 10; ++c) ev += wy * value_prob(c) * Rational(settle(pf, (b + c) % 10));
        } else {
          ev += wy * Rational(settle(pf, b));
        }
      }
    }
  return ev;
}

bool table_draws(int x, int y) { return kTable[x][y < 0 ? 10 : y] == 'D'; }

}  // namespace

TEST_SUITE("baccarat") {

TEST_CASE("drawing table") {
  int cells = 0;
  for (int x = 0; x <= 7; ++x) {
    for (int y = -1; y <= 9; ++y) {
      const Action printed = table_draws(x, y) ? Action::kDraw : Action::kStand;
      CHECK(banker_action(x, y) == printed);
      CHECK(banker_action_compact(x, y) == printed);
      ++cells;
    }
  }
  CHECK(cells == 88);
  CHECK(banker_action(3, 8) == Action::kStand);
  CHECK(banker_action(6, kNoCard) == Action::kStand);
  CHECK(table_text().find("S S S S S S D D S S S") != std::string::npos);
}

TEST_CASE("card values") {
  Rational sum;
  for (int v = 0; v < 10; ++v) sum += card_value_probability(v);
  CHECK(sum == Rational(1));
  Rational t0;
  for (int a = 0; a < 10; ++a) t0 += value_prob(a) * value_prob((10 - a) % 10);
  CHECK(two_card_totals()[0] == t0);
}

TEST_CASE("banker's choice at (3,8)") {
  CHECK(banker_choice_ev(3, 8, Action::kDraw) == Rational(86, 1365));
  CHECK(banker_choice_ev(3, 8, Action::kStand) == Rational(91, 1365));
  for (int y = -1; y <= 9; ++y) CHECK(banker_choice_ev(7, y, Action::kStand) >= banker_choice_ev(7, y, Action::kDraw));
}

TEST_CASE("player bet") {
  const Rational oracle = player_ev_oracle(5, table_draws);
  CHECK(player_bet_ev() == oracle);
  CHECK(chemin_player_ev(true, 0b0101) == oracle);
  // Every one of the 32 pure strategy pairs against the tree oracle.
  for (int draws5 = 0; draws5 < 2; ++draws5) {
    for (unsigned bits = 0; bits < 16; ++bits) {
      const auto draws = [bits](int x, int y) {
        const auto& cells = free_cells();
        for (std::size_t k = 0; k < cells.size(); ++k) {
          const int cy = cells[k].y;
          if (cells[k].x == x && cy == y) return ((bits >> k) & 1u) != 0;
        }
        return table_draws(x, y);
      };
      CHECK(chemin_player_ev(draws5 != 0, bits) == player_ev_oracle(draws5 ? 5 : 4, draws));
      const auto o = chemin_outcome(draws5 != 0, bits);
      CHECK(o.player_win + o.banker_win + o.tie == Rational(1));
      CHECK(o.player_win - o.banker_win == chemin_player_ev(draws5 != 0, bits));
    }
  }
}

TEST_CASE("chemin de fer game") {
  const auto g = std::get<gametheory::MatrixGame>(build_chemin_game(Rational(0)));
  CHECK(g.payoff.rows() == 2);
  CHECK(g.payoff.cols() == 16);
  const auto red = gametheory::reduce_dominance(g);
  CHECK(red.rows.size() == 2);
  CHECK(red.cols.size() == 10);
  const auto s = gametheory::solve_zero_sum(g);
  CHECK(s.row_mix[0] == Rational(9, 11));
  CHECK(s.row_mix[1] == Rational(2, 11));
  CHECK(gametheory::verify_minimax(g, s));
  // Banker: draw (3,9), stand (4,1), draw (5,4), mix on (6, none).
  Rational draw6, stand6;
  for (std::size_t j = 0; j < 16; ++j) {
    if (s.col_mix[j].is_zero()) continue;
    CHECK((j & 1u) == 1u);
    CHECK((j & 2u) == 0u);
    CHECK((j & 4u) == 4u);
    ((j & 8u) ? draw6 : stand6) += s.col_mix[j];
  }
  CHECK(draw6 == Rational(859, 2288));
  CHECK(stand6 == Rational(1429, 2288));

  const auto bg = std::get<gametheory::BimatrixGame>(build_chemin_game(Rational(1, 20)));
  const auto sols = gametheory::solve_bimatrix_2x2(bg);
  REQUIRE_FALSE(sols.equilibria.empty());
  for (const auto& e : sols.equilibria) CHECK(gametheory::verify_nash(bg, e));
}

}  // TEST_SUITE
