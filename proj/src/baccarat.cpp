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

#include "house_edge/baccarat.hpp"

#include "house_edge/error.hpp"

namespace house_edge::baccarat {

Rational card_value_probability(int v) {
  if (v < 0 || v > 9) return Rational(0);
  return v == 0 ? Rational(4, 13) : Rational(1, 13);
}

const std::array<Rational, 10>& two_card_totals() {
  static const auto kTotals = [] {
    std::array<Rational, 10> t;
    for (int a = 0; a < 10; ++a) {
      for (int b = 0; b < 10; ++b) t[(a + b) % 10] += card_value_probability(a) * card_value_probability(b);
    }
    return t;
  }();
  return kTotals;
}

namespace {

// Columns 0..9 then "none".
constexpr std::array<const char*, 8> kTable{
    "DDDDDDDDDDD", "DDDDDDDDDDD", "DDDDDDDDDDD", "DDDDDDDDSDD",
    "SSDDDDDDSSD", "SSSSDDDDSSD", "SSSSSSDDSSS", "SSSSSSSSSSS",
};

void check_cell(int x, int y) {
  if (x < 0 || x > 7) throw Error(ErrorCode::kInvalidTotal, "Banker total must be 0..7");
  if (y != kNoCard && (y < 0 || y > 9)) throw Error(ErrorCode::kInvalidTotal, "third card must be 0..9 or none");
}

int sign_of(int banker, int player) { return banker > player ? 1 : (banker < player ? -1 : 0); }

}  // namespace

Action banker_action(int x, int y) {
  check_cell(x, y);
  const int col = y == kNoCard ? 10 : y;
  return kTable[x][col] == 'D' ? Action::kDraw : Action::kStand;
}

Action banker_action_compact(int x, int y) {
  check_cell(x, y);
  if (x <= 2) return Action::kDraw;
  if (x == 7) return Action::kStand;
  if (y == kNoCard) return x <= 5 ? Action::kDraw : Action::kStand;
  const bool draw = (2 * (x - 3) <= y && y <= 7) || (x == 3 && y == 9);
  return draw ? Action::kDraw : Action::kStand;
}

std::string table_text() {
  std::string out = "   0 1 2 3 4 5 6 7 8 9 -\n";
  for (int x = 0; x <= 7; ++x) {
    out += std::to_string(x) + " ";
    for (int col = 0; col <= 10; ++col) {
      out += ' ';
      out += kTable[x][col];
    }
    out += '\n';
  }
  return out;
}

Rational banker_choice_ev(int x, int y, Action action, int player_draw_max) {
  check_cell(x, y);
  // Player's two-card totals consistent with the observed draw or stand.
  const auto& t = two_card_totals();
  Rational mass;
  std::array<Rational, 10> player{};
  for (int p = 0; p <= 7; ++p) {
    const bool drew = p <= player_draw_max;
    if (drew != (y != kNoCard)) continue;
    player[y == kNoCard ? p : (p + y) % 10] += t[p];
    mass += t[p];
  }
  if (mass.is_zero()) throw Error(ErrorCode::kUnreachableState, "no Player total leads to this state");
  Rational ev;
  for (int f = 0; f < 10; ++f) {
    if (player[f].is_zero()) continue;
    const Rational w = player[f] / mass;
    if (action == Action::kStand) {
      ev += w * sign_of(x, f);
    } else {
      for (int c = 0; c < 10; ++c) ev += w * card_value_probability(c) * sign_of((x + c) % 10, f);
    }
  }
  return ev;
}

const std::array<FreeCell, 4>& free_cells() {
  static constexpr std::array<FreeCell, 4> kCells{{{3, 9}, {4, 1}, {5, 4}, {6, kNoCard}}};
  return kCells;
}

namespace {

Action chemin_banker(int x, int y, unsigned bits) {
  for (std::size_t k = 0; k < free_cells().size(); ++k) {
    if (free_cells()[k].x == x && free_cells()[k].y == y) return (bits >> k) & 1 ? Action::kDraw : Action::kStand;
  }
  return banker_action(x, y);
}

}  // namespace

BankerOutcome chemin_outcome(bool player_draws_on_5, unsigned banker_bits) {
  const auto& t = two_card_totals();
  BankerOutcome out;
  auto record = [&](const Rational& w, int banker, int player) {
    const int s = sign_of(banker, player);
    if (s > 0) out.banker_win += w;
    else if (s < 0) out.player_win += w;
    else out.tie += w;
  };
  for (int p = 0; p < 10; ++p) {
    for (int b = 0; b < 10; ++b) {
      const Rational w = t[p] * t[b];
      if (p >= 8 || b >= 8) {
        record(w, b, p);
        continue;
      }
      const bool player_draws = p <= 4 || (p == 5 && player_draws_on_5);
      for (int y = 0; y < 10; ++y) {
        const Rational wy = player_draws ? w * card_value_probability(y) : w;
        const int pf = player_draws ? (p + y) % 10 : p;
        const int seen = player_draws ? y : kNoCard;
        if (chemin_banker(b, seen, banker_bits) == Action::kDraw) {
          for (int c = 0; c < 10; ++c) record(wy * card_value_probability(c), (b + c) % 10, pf);
        } else {
          record(wy, b, pf);
        }
        if (!player_draws) break;
      }
    }
  }
  return out;
}

Rational chemin_player_ev(bool player_draws_on_5, unsigned banker_bits) {
  const auto o = chemin_outcome(player_draws_on_5, banker_bits);
  return o.player_win - o.banker_win;
}

std::variant<gametheory::MatrixGame, gametheory::BimatrixGame> build_chemin_game(const Rational& commission) {
  if (commission.sign() < 0 || commission >= Rational(1)) {
    throw Error(ErrorCode::kInvalidCommission, "commission must be in [0, 1)");
  }
  RationalMatrix a(2, 16);
  RationalMatrix b(2, 16);
  for (int row = 0; row < 2; ++row) {
    for (unsigned bits = 0; bits < 16; ++bits) {
      const auto o = chemin_outcome(row == 0, bits);
      a(row, bits) = o.player_win - o.banker_win;
      b(row, bits) = o.banker_win * (Rational(1) - commission) - o.player_win;
    }
  }
  std::vector<std::string> cols;
  for (unsigned bits = 0; bits < 16; ++bits) {
    std::string label;
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& cell = free_cells()[k];
      if (!label.empty()) label += ' ';
      label += "(" + std::to_string(cell.x) + "," + (cell.y == kNoCard ? std::string("-") : std::to_string(cell.y)) +
               ")" + ((bits >> k) & 1 ? "D" : "S");
    }
    cols.push_back(label);
  }
  std::vector<std::string> rows{"draw on 5", "stand on 5"};
  if (commission.is_zero()) return gametheory::make_matrix_game(std::move(a), std::move(rows), std::move(cols));
  return gametheory::make_bimatrix_game(std::move(a), std::move(b), std::move(rows), std::move(cols));
}

Rational player_bet_ev() {
  unsigned bits = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& cell = free_cells()[k];
    if (banker_action(cell.x, cell.y) == Action::kDraw) bits |= 1u << k;
  }
  return chemin_player_ev(true, bits);
}

}  // namespace house_edge::baccarat
