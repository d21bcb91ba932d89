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

#include "house_edge/snackjack.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "house_edge/error.hpp"

namespace house_edge::snackjack {

std::string SnackDeck::str() const {
  return "(" + std::to_string(counts[0]) + "," + std::to_string(counts[1]) + "," + std::to_string(counts[2]) + ")";
}

SnackDeck full_deck() { return SnackDeck{{2, 2, 4}}; }

int parse_rank(const std::string& text) {
  if (text == "A" || text == "a" || text == "1") return 1;
  if (text == "2") return 2;
  if (text == "3") return 3;
  throw Error(ErrorCode::kParse, "snackjack ranks are A, 2, 3; got '" + text + "'");
}

std::string rank_name(int rank) { return rank == 1 ? "A" : std::to_string(rank); }

SnackDeck parse_hand(const std::string& text) {
  SnackDeck hand;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    if (!item.empty()) ++hand[parse_rank(item)];
  }
  const SnackDeck full = full_deck();
  for (int r = 1; r <= 3; ++r) {
    if (hand[r] > full[r]) throw Error(ErrorCode::kInconsistentDeck, "more " + rank_name(r) + "s than the deck holds");
  }
  return hand;
}

int hard_total(const SnackDeck& hand) { return hand[1] + 2 * hand[2] + 3 * hand[3]; }

bool is_soft(const SnackDeck& hand) { return hand[1] > 0 && hard_total(hand) + 3 <= 7; }

int hand_total(const SnackDeck& hand) { return hard_total(hand) + (is_soft(hand) ? 3 : 0); }

bool is_natural(const SnackDeck& hand) { return hand.size() == 2 && hand[1] == 1 && hand[3] == 1; }

bool makes_natural(int up, int down) { return (up == 1 && down == 3) || (up == 3 && down == 1); }

std::string action_name(Action a) {
  switch (a) {
    case Action::kStand: return "stand";
    case Action::kHit: return "hit";
    case Action::kDouble: return "double";
    case Action::kSplit: return "split";
  }
  return "?";
}

namespace {

SnackDeck minus(SnackDeck d, int rank) {
  if (d[rank] <= 0) throw Error(ErrorCode::kInconsistentDeck, "no " + rank_name(rank) + " left");
  --d[rank];
  return d;
}

SnackDeck plus(SnackDeck d, int rank) {
  ++d[rank];
  return d;
}

// Cards in `r` that would not give the dealer a natural as downcard.
int non_natural_count(int up, const SnackDeck& r) {
  int n = 0;
  for (int d = 1; d <= 3; ++d) {
    if (!makes_natural(up, d)) n += r[d];
  }
  return n;
}

void check_state(const SnackState& s) {
  const SnackDeck full = full_deck();
  for (int r = 1; r <= 3; ++r) {
    const int used = s.player[r] + s.remaining[r] + (s.upcard == r ? 1 : 0);
    if (s.player[r] < 0 || s.remaining[r] < 0 || used != full[r]) {
      throw Error(ErrorCode::kInconsistentDeck, "cards do not add up to the single deck");
    }
  }
  if (s.upcard < 1 || s.upcard > 3) throw Error(ErrorCode::kInconsistentDeck, "bad upcard");
  if (non_natural_count(s.upcard, s.remaining) == 0) {
    throw Error(ErrorCode::kUnreachableState, "the dealer must hold a natural here");
  }
}

void dealer_play(const SnackDeck& hand, const SnackDeck& deck, const Rational& w, std::vector<int>& cards,
                 const std::function<void(const std::vector<int>&, const Rational&, int)>& emit) {
  if (hard_total(hand) > 7) {
    emit(cards, w, 8);
    return;
  }
  const int total = hand_total(hand);
  if (total >= 6) {
    emit(cards, w, total);
    return;
  }
  if (deck.size() == 0) throw Error(ErrorCode::kInconsistentDeck, "dealer must hit from an empty deck");
  for (int c = 1; c <= 3; ++c) {
    if (deck[c] == 0) continue;
    cards.push_back(c);
    dealer_play(plus(hand, c), minus(deck, c), w * Rational(deck[c], deck.size()), cards, emit);
    cards.pop_back();
  }
}

}  // namespace

std::vector<DealerSequence> dealer_sequences(int upcard, const SnackDeck& deck) {
  if (upcard < 1 || upcard > 3 || deck.size() == 0) throw Error(ErrorCode::kInconsistentDeck, "bad dealer state");
  std::vector<DealerSequence> out;
  for (int d = 1; d <= 3; ++d) {
    if (deck[d] == 0) continue;
    const Rational w(deck[d], deck.size());
    std::vector<int> cards{upcard, d};
    if (makes_natural(upcard, d)) {
      out.push_back({cards, w, 0});
      continue;
    }
    SnackDeck hand;
    ++hand[upcard];
    ++hand[d];
    dealer_play(hand, minus(deck, d), w, cards, [&](const std::vector<int>& seq, const Rational& p, int final_total) {
      out.push_back({seq, p, final_total});
    });
  }
  return out;
}

SnackState initial_state(const SnackDeck& player, int upcard) {
  SnackState s;
  s.player = player;
  s.upcard = upcard;
  s.remaining = full_deck();
  for (int r = 1; r <= 3; ++r) s.remaining[r] -= player[r];
  s.remaining[upcard] -= 1;
  for (int r = 1; r <= 3; ++r) {
    if (s.remaining[r] < 0) throw Error(ErrorCode::kInconsistentDeck, "more cards than the deck holds");
  }
  return s;
}

std::array<Rational, 3> hit_card_probabilities(int upcard, const SnackDeck& remaining) {
  const int n = non_natural_count(upcard, remaining);
  if (n == 0) throw Error(ErrorCode::kUnreachableState, "the dealer must hold a natural here");
  if (remaining.size() < 2) throw Error(ErrorCode::kIllegalAction, "no card left to draw");
  std::array<Rational, 3> p;
  for (int c = 1; c <= 3; ++c) {
    if (remaining[c] == 0) continue;
    p[c - 1] = Rational(remaining[c] * non_natural_count(upcard, minus(remaining, c)),
                        static_cast<long long>(n) * (remaining.size() - 1));
  }
  return p;
}

std::array<Rational, 9> Engine::dealer_distribution(int upcard, const SnackDeck& remaining) {
  const auto key = std::make_tuple(upcard, remaining);
  if (auto it = dealer_memo_.find(key); it != dealer_memo_.end()) return it->second;
  const int n = non_natural_count(upcard, remaining);
  if (n == 0) throw Error(ErrorCode::kUnreachableState, "the dealer must hold a natural here");
  std::array<Rational, 9> dist;
  for (int d = 1; d <= 3; ++d) {
    if (remaining[d] == 0 || makes_natural(upcard, d)) continue;
    SnackDeck hand;
    ++hand[upcard];
    ++hand[d];
    std::vector<int> cards;
    dealer_play(hand, minus(remaining, d), Rational(remaining[d], n), cards,
                [&](const std::vector<int>&, const Rational& p, int final_total) { dist[final_total] += p; });
  }
  dealer_memo_.emplace(key, dist);
  return dist;
}

Rational Engine::stand_ev(int total, int upcard, const SnackDeck& remaining) {
  if (total > 7) return Rational(-1);
  const auto dist = dealer_distribution(upcard, remaining);
  Rational ev = dist[8];
  for (int t = 0; t <= 7; ++t) {
    if (t < total) ev += dist[t];
    else if (t > total) ev -= dist[t];
  }
  return ev;
}

Rational Engine::hit_ev(const SnackState& s) {
  const auto key = std::make_tuple(s.player, s.upcard, s.remaining);
  if (auto it = hit_memo_.find(key); it != hit_memo_.end()) return it->second;
  const auto p = hit_card_probabilities(s.upcard, s.remaining);
  Rational ev;
  for (int c = 1; c <= 3; ++c) {
    if (p[c - 1].is_zero()) continue;
    SnackState next{plus(s.player, c), s.upcard, minus(s.remaining, c)};
    if (hard_total(next.player) > 7) {
      ev -= p[c - 1];
      continue;
    }
    Rational best = stand_ev(hand_total(next.player), s.upcard, next.remaining);
    if (next.remaining.size() >= 2) best = max(best, hit_ev(next));
    ev += p[c - 1] * best;
  }
  hit_memo_.emplace(key, ev);
  return ev;
}

Rational Engine::double_ev(const SnackState& s) {
  const auto p = hit_card_probabilities(s.upcard, s.remaining);
  Rational ev;
  for (int c = 1; c <= 3; ++c) {
    if (p[c - 1].is_zero()) continue;
    const SnackDeck hand = plus(s.player, c);
    ev += p[c - 1] * 2 * stand_ev(hard_total(hand) > 7 ? 8 : hand_total(hand), s.upcard, minus(s.remaining, c));
  }
  return ev;
}

Rational Engine::split_ev(const SnackState& s) {
  int pair = 0;
  for (int r = 1; r <= 3; ++r) {
    if (s.player[r] == 2) pair = r;
  }
  const std::array<int, 2> stakes_options{1, 2};
  const int max_stake = rules_.double_after_split ? 2 : 1;
  // Each paircard gets one card; with doubling, the stake on each hand is
  // chosen before its card is dealt.
  Rational best_total;
  bool first = true;
  for (int d1 : stakes_options) {
    if (d1 > max_stake) continue;
    const auto p1 = hit_card_probabilities(s.upcard, s.remaining);
    Rational ev;
    for (int c1 = 1; c1 <= 3; ++c1) {
      if (p1[c1 - 1].is_zero()) continue;
      const SnackDeck r1 = minus(s.remaining, c1);
      const auto p2 = hit_card_probabilities(s.upcard, r1);
      Rational best_inner;
      bool first_inner = true;
      for (int d2 : stakes_options) {
        if (d2 > max_stake) continue;
        Rational inner;
        for (int c2 = 1; c2 <= 3; ++c2) {
          if (p2[c2 - 1].is_zero()) continue;
          const SnackDeck r2 = minus(r1, c2);
          SnackDeck h1;
          SnackDeck h2;
          ++h1[pair];
          ++h1[c1];
          ++h2[pair];
          ++h2[c2];
          inner += p2[c2 - 1] * (d1 * stand_ev(hand_total(h1), s.upcard, r2) +
                                 d2 * stand_ev(hand_total(h2), s.upcard, r2));
        }
        if (first_inner || inner > best_inner) best_inner = inner;
        first_inner = false;
      }
      ev += p1[c1 - 1] * best_inner;
    }
    if (first || ev > best_total) best_total = ev;
    first = false;
  }
  return best_total;
}

std::vector<Action> Engine::legal_actions(const SnackState& s) const {
  if (hard_total(s.player) > 7) return {};
  if (is_natural(s.player)) return {Action::kStand};
  std::vector<Action> out{Action::kStand};
  if (s.remaining.size() >= 2) out.push_back(Action::kHit);
  if (s.player.size() == 2 && s.remaining.size() >= 2) {
    out.push_back(Action::kDouble);
    const bool pair = s.player[1] == 2 || s.player[2] == 2 || s.player[3] == 2;
    if (pair && s.remaining.size() >= 3) out.push_back(Action::kSplit);
  }
  return out;
}

Rational Engine::action_ev(const SnackState& s, Action a) {
  check_state(s);
  const auto legal = legal_actions(s);
  if (std::find(legal.begin(), legal.end(), a) == legal.end()) {
    throw Error(ErrorCode::kIllegalAction, action_name(a) + " is not available with " + s.player.str());
  }
  if (is_natural(s.player)) return rules_.natural_payout;
  switch (a) {
    case Action::kStand: return stand_ev(hand_total(s.player), s.upcard, s.remaining);
    case Action::kHit: return hit_ev(s);
    case Action::kDouble: return double_ev(s);
    case Action::kSplit: return split_ev(s);
  }
  return Rational(0);
}

Decision Engine::best(const SnackState& s) {
  check_state(s);
  const auto legal = legal_actions(s);
  if (legal.empty()) throw Error(ErrorCode::kIllegalAction, "hand is already bust");
  Decision d;
  bool first = true;
  for (Action a : legal) {  // stand, hit, double, split: earlier wins ties
    const Rational ev = action_ev(s, a);
    d.evs.emplace(a, ev);
    if (first || ev > d.ev) {
      d.ev = ev;
      d.action = a;
    }
    first = false;
  }
  for (const auto& [a, ev] : d.evs) {
    if (a != d.action && ev == d.ev) d.tie = true;
  }
  return d;
}

std::vector<std::pair<SnackDeck, int>> decision_points() {
  std::vector<std::pair<SnackDeck, int>> out;
  const SnackDeck full = full_deck();
  for (int up = 1; up <= 3; ++up) {
    for (int cards = 2; cards <= 8; ++cards) {
      for (int a = 0; a <= full[1]; ++a) {
        for (int b = 0; b <= full[2]; ++b) {
          const int c = cards - a - b;
          if (c < 0 || c > full[3]) continue;
          const SnackDeck hand{{a, b, c}};
          if (hard_total(hand) > 7 || hand[up] + 1 > full[up]) continue;
          SnackDeck rest = full;
          for (int r = 1; r <= 3; ++r) rest[r] -= hand[r];
          --rest[up];
          if (non_natural_count(up, rest) == 0) continue;
          out.emplace_back(hand, up);
        }
      }
    }
  }
  return out;
}

StrategyTable Engine::basic_strategy() {
  StrategyTable table;
  for (const auto& [hand, up] : decision_points()) {
    DecisionPoint p;
    p.player = hand;
    p.upcard = up;
    p.natural = is_natural(hand);
    p.decision = best(initial_state(hand, up));
    table.points.push_back(std::move(p));
  }
  // Unconditional game expectation over the ordered deal.
  const SnackDeck full = full_deck();
  for (int c1 = 1; c1 <= 3; ++c1) {
    for (int c2 = 1; c2 <= 3; ++c2) {
      for (int up = 1; up <= 3; ++up) {
        SnackDeck d = full;
        Rational w(d[c1], d.size());
        d = minus(d, c1);
        if (d[c2] == 0) continue;
        w *= Rational(d[c2], d.size());
        d = minus(d, c2);
        if (d[up] == 0) continue;
        w *= Rational(d[up], d.size());
        d = minus(d, up);
        SnackDeck hand;
        ++hand[c1];
        ++hand[c2];
        const int nat = d.size() - non_natural_count(up, d);
        const Rational p_nat(nat, d.size());
        const Rational if_nat = is_natural(hand) ? Rational(0) : Rational(-1);
        Rational if_not;
        if (nat < d.size()) {
          if_not = is_natural(hand) ? rules_.natural_payout : best(SnackState{hand, up, d}).ev;
        }
        table.game_ev += w * (p_nat * if_nat + (Rational(1) - p_nat) * if_not);
      }
    }
  }
  return table;
}

}  // namespace house_edge::snackjack
