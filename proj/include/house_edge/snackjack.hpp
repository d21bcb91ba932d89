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

#ifndef HOUSE_EDGE_SNACKJACK_HPP_
#define HOUSE_EDGE_SNACKJACK_HPP_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "house_edge/rational.hpp"

namespace house_edge::snackjack {

// Ranks are 1 (ace), 2 (deuce), 3 (trey). An ace counts 4 when that keeps the
// total at 7 or below.
struct SnackDeck {
  std::array<int, 3> counts{};  // aces, deuces, treys

  int& operator[](int rank) { return counts[rank - 1]; }
  int operator[](int rank) const { return counts[rank - 1]; }
  int size() const { return counts[0] + counts[1] + counts[2]; }
  std::string str() const;

  friend auto operator<=>(const SnackDeck&, const SnackDeck&) = default;
};

SnackDeck full_deck();
SnackDeck parse_hand(const std::string& text);  // e.g. "3,3" or "A,2,2"
int parse_rank(const std::string& text);
std::string rank_name(int rank);

int hard_total(const SnackDeck& hand);
int hand_total(const SnackDeck& hand);
bool is_soft(const SnackDeck& hand);
bool is_natural(const SnackDeck& hand);
// True when the downcard `down` with upcard `up` is ace-trey.
bool makes_natural(int up, int down);

struct DealerSequence {
  std::vector<int> cards;  // upcard first
  Rational probability;
  int final_total = 0;  // 0 for a dealer natural, 8 for a bust
};

// Every way the dealer's hand can finish from `deck` (the cards the downcard
// and hits come from). Naturals end the sequence.
std::vector<DealerSequence> dealer_sequences(int upcard, const SnackDeck& deck);

enum class Action { kStand, kHit, kDouble, kSplit };
std::string action_name(Action a);

enum class Context { kInitial, kAfterHit };

struct SnackState {
  SnackDeck player;
  int upcard = 1;
  SnackDeck remaining;  // unseen cards, including the dealer's downcard
};

// State after dealing `player` and `upcard` from a full deck.
SnackState initial_state(const SnackDeck& player, int upcard);

struct Rules {
  Rational natural_payout{3, 2};
  bool double_after_split = false;
};

struct Decision {
  Action action = Action::kStand;
  Rational ev;
  std::map<Action, Rational> evs;  // every legal action
  bool tie = false;
};

struct DecisionPoint {
  SnackDeck player;
  int upcard = 1;
  bool natural = false;
  Decision decision;
};

struct StrategyTable {
  std::vector<DecisionPoint> points;
  Rational game_ev;  // unconditional expectation per initial unit
};

class Engine {
 public:
  explicit Engine(Rules rules = {}) : rules_(std::move(rules)) {}

  const Rules& rules() const { return rules_; }

  // Expectations conditional on the dealer not holding a natural.
  Rational action_ev(const SnackState& s, Action a);
  Decision best(const SnackState& s);
  StrategyTable basic_strategy();

  // Final dealer total distribution (index 0..7 stand totals, 8 bust), given
  // the dealer has no natural.
  std::array<Rational, 9> dealer_distribution(int upcard, const SnackDeck& remaining);

 private:
  Rational stand_ev(int total, int upcard, const SnackDeck& remaining);
  Rational hit_ev(const SnackState& s);
  Rational double_ev(const SnackState& s);
  Rational split_ev(const SnackState& s);
  std::vector<Action> legal_actions(const SnackState& s) const;

  Rules rules_;
  std::map<std::tuple<int, SnackDeck>, std::array<Rational, 9>> dealer_memo_;
  std::map<std::tuple<SnackDeck, int, SnackDeck>, Rational> hit_memo_;
};

// Composition-dependent decision points: player compositions of two or more
// cards with hard total at most 7, against each upcard, such that the unseen
// cards still allow a non-natural dealer downcard.
std::vector<std::pair<SnackDeck, int>> decision_points();

// Probability of each hit card from `remaining`, given the downcard is not a
// natural-maker with `upcard`.
std::array<Rational, 3> hit_card_probabilities(int upcard, const SnackDeck& remaining);

}  // namespace house_edge::snackjack

#endif  // HOUSE_EDGE_SNACKJACK_HPP_
