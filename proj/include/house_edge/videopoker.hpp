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

#ifndef HOUSE_EDGE_VIDEOPOKER_HPP_
#define HOUSE_EDGE_VIDEOPOKER_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "house_edge/cards.hpp"
#include "house_edge/rational.hpp"
#include "house_edge/wager.hpp"

namespace house_edge::videopoker {

// Jacks or Better pay classes, worst to best.
enum PayClass {
  kNothing = 0,
  kJacksOrBetter,
  kTwoPairs,
  kTrips,
  kStraight,
  kFlush,
  kFullHouse,
  kQuads,
  kStraightFlush,
  kRoyalFlush,
  kPayClasses
};
std::string pay_class_name(int c);

PayClass pay_class(cards::HandValue v);
PayClass pay_class_of_mask(std::uint64_t five_card_mask);

// Returns per unit bet ("for 1"), indexed by PayClass.
struct PayTable {
  std::string name;
  std::array<Rational, kPayClasses> returns{};
};

// Checks royal >= straight flush >= ... >= jacks or better >= 0 and other = 0.
PayTable make_paytable(std::string name, std::array<Rational, kPayClasses> returns);
// Presets: 9-6, 9-6-940, 8-5, 8-5-2500.
PayTable preset_paytable(const std::string& name);
std::vector<std::string> preset_names();
PayTable paytable_from_json(const nlohmann::json& j);
nlohmann::json paytable_json(const PayTable& pt);

// Exact EV of holding the masked cards (bit i = hand[i]) and drawing the rest,
// by listing every completion with the reference evaluator.
Rational hold_ev(std::span<const cards::Card> hand, unsigned mask, const PayTable& pt);

struct HoldResult {
  unsigned mask = 0;
  Rational ev;
};

struct HoldAnalysis {
  std::vector<cards::Card> hand;
  std::vector<HoldResult> per_hold;  // indexed by mask
  HoldResult best;
  bool tie = false;
};

// All 32 holds of one hand, by direct enumeration with the bit-mask evaluator.
HoldAnalysis analyze_hand(std::span<const cards::Card> hand, const PayTable& pt);
std::string mask_cards(std::span<const cards::Card> hand, unsigned mask);

struct GameAnalysis {
  std::string paytable;
  Rational expected_return;
  Rational second_moment;         // E[R^2] under optimal play
  Rational conditional_second;    // E[m(H)^2], m = optimal conditional EV
  Rational royal_probability;
  std::array<Rational, kPayClasses> class_probability{};
  std::map<Rational, std::uint64_t> value_histogram;  // optimal conditional EV -> hands
  std::size_t distinct_values = 0;
  std::size_t distinct_non_garbage = 0;  // excluding hands best played by discarding all
  std::uint64_t equivalence_classes = 0;
  std::uint64_t hands = 0;
  std::uint64_t tied_classes = 0;
  std::uint64_t tied_hands = 0;

  Rational variance() const { return second_moment - expected_return * expected_return; }
  Approx sd(int digits = 12) const { return sqrt_approx(variance(), digits); }
  PayoffDistribution net_distribution(const PayTable& pt) const;
};

// Precomputed completion counts over every subset of up to four cards; built
// once and shared by every pay table.
class Analyzer {
 public:
  Analyzer();
  ~Analyzer();
  Analyzer(const Analyzer&) = delete;
  Analyzer& operator=(const Analyzer&) = delete;

  // Ties between holds go to the hold keeping more cards, then the lower mask.
  GameAnalysis analyze(const PayTable& pt, unsigned threads = 1) const;
  HoldAnalysis analyze_hand(std::span<const cards::Card> hand, const PayTable& pt) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

enum class MultiPlayStake {
  kDivided,  // one unit split evenly across the n lines
  kPerPlay,  // one unit on each line; variance of the total return
};
// Variance for n-play with lines drawing independently from the shared
// 47-card residual.
Rational multiplay_variance(const GameAnalysis& g, unsigned n, MultiPlayStake stake);

}  // namespace house_edge::videopoker

#endif  // HOUSE_EDGE_VIDEOPOKER_HPP_
