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

#ifndef HOUSE_EDGE_CARDS_HPP_
#define HOUSE_EDGE_CARDS_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "house_edge/rational.hpp"

namespace house_edge::cards {

// Card index = suit * 13 + (rank - 2); suits c, d, h, s are 0..3, ranks 2..14.
struct Card {
  int index = 0;

  Card() = default;
  constexpr explicit Card(int i) : index(i) {}
  constexpr Card(int rank, int suit) : index(suit * 13 + rank - 2) {}

  constexpr int rank() const { return index % 13 + 2; }
  constexpr int suit() const { return index / 13; }
  std::string str() const;

  friend constexpr auto operator<=>(const Card&, const Card&) = default;
};

Card parse_card(std::string_view text);
// Space- or comma-separated cards, or a run like "AsKhQd".
std::vector<Card> parse_cards(std::string_view text);
std::string cards_str(std::span<const Card> cards);

// Throws DuplicateCard on repeats.
std::uint64_t card_mask(std::span<const Card> cards);

enum class HandCategory {
  kHighCard = 0,
  kOnePair,
  kTwoPairs,
  kTrips,
  kStraight,
  kFlush,
  kFullHouse,
  kQuads,
  kStraightFlush,
  kRoyalFlush,
};
std::string category_name(HandCategory c);

// Packed value: category << 20, then up to five tiebreak ranks, 4 bits each.
// Larger is better.
struct HandValue {
  std::uint32_t code = 0;

  HandCategory category() const { return static_cast<HandCategory>(code >> 20); }
  std::array<int, 5> tiebreak() const;

  friend auto operator<=>(const HandValue&, const HandValue&) = default;
};

HandValue evaluate5(std::span<const Card> hand);
// Best five of seven, from the bit mask of the seven cards.
HandValue evaluate7_mask(std::uint64_t mask);
HandValue evaluate7(std::span<const Card> hand);
// Maximum of evaluate5 over the 21 five-card subsets.
HandValue evaluate7_by_subsets(std::span<const Card> hand);

struct DenominationSignature {
  std::array<int, 5> d{};  // d[i]: denominations represented i times
};
Rational signature_probability(const DenominationSignature& sig);
std::vector<DenominationSignature> all_signatures();

// Lexicographically least sorted hand over the 24 suit permutations.
std::vector<Card> suit_canonical(std::span<const Card> hand);

// Applies perm (old suit -> new suit) to a card.
inline Card permute_suit(Card c, const std::array<int, 4>& perm) { return Card(c.rank(), perm[c.suit()]); }
const std::array<std::array<int, 4>, 24>& suit_permutations();

// Suit classes of five-card hands: least representative (ascending card
// indices) and class size. There are 134,459.
struct HandClass {
  std::array<Card, 5> cards;
  std::uint32_t weight = 0;
};
const std::vector<HandClass>& five_card_classes();

}  // namespace house_edge::cards

#endif  // HOUSE_EDGE_CARDS_HPP_
