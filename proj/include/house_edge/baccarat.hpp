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

#ifndef HOUSE_EDGE_BACCARAT_HPP_
#define HOUSE_EDGE_BACCARAT_HPP_

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "house_edge/gametheory.hpp"
#include "house_edge/rational.hpp"

namespace house_edge::baccarat {

// Infinite-deck card value: 0 w.p. 4/13, 1..9 w.p. 1/13 each.
Rational card_value_probability(int v);
// Two-card total distribution, mod 10.
const std::array<Rational, 10>& two_card_totals();

enum class Action { kDraw, kStand };
inline constexpr int kNoCard = -1;  // Player stood

// Banker's mandatory action as printed (rows 0..7, columns 0..9 and none).
Action banker_action(int x, int y);
// The compact rule: rows 0-2 draw, row 7 stands; on rows 3-6 draw iff
// 2(x-3) <= y <= 7 or (x,y) = (3,9), and with no third card draw iff x <= 5.
Action banker_action_compact(int x, int y);
std::string table_text();

// Banker's expectation (Banker bet, no commission) at two-card total x facing
// Player's third card y, when Player draws on totals 0..(player_draw_max) and
// stands otherwise.
Rational banker_choice_ev(int x, int y, Action action, int player_draw_max = 5);

// The four cells where Banker's choice is free in chemin de fer.
struct FreeCell {
  int x;
  int y;
};
const std::array<FreeCell, 4>& free_cells();

// Player's expectation per unit Player bet when Player draws on 5 or not and
// Banker uses the drawing table except on the free cells, where bit k of banker_bits
// says draw on free_cells()[k].
Rational chemin_player_ev(bool player_draws_on_5, unsigned banker_bits);
// Expectation of the Banker bet under the same rules, before commission,
// together with the probability that Banker wins.
struct BankerOutcome {
  Rational player_win;
  Rational banker_win;
  Rational tie;
};
BankerOutcome chemin_outcome(bool player_draws_on_5, unsigned banker_bits);

// Rows: draw on 5, stand on 5. Columns: the 16 choices on the free cells.
// Commission 0 gives a zero-sum game in Player's expectation; otherwise a
// bimatrix game with Banker's winnings scaled by 1 - commission.
std::variant<gametheory::MatrixGame, gametheory::BimatrixGame> build_chemin_game(const Rational& commission);

// Baccarat Player bet: Player draws on 0-5, Banker follows the drawing table.
Rational player_bet_ev();

}  // namespace house_edge::baccarat

#endif  // HOUSE_EDGE_BACCARAT_HPP_
