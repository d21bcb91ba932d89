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


#include <map>
#include <random>
#include <unordered_set>

#include "doctest.h"
#include "house_edge/cards.hpp"
#include "house_edge/error.hpp"

using namespace house_edge;
using namespace house_edge::cards;

namespace {

std::array<int, 5> signature_of(const std::array<Card, 5>& h) {
  std::array<int, 13> per_rank{};
  for (const auto& c : h) ++per_rank[static_cast<std::size_t>(c.rank() - 2)];
  std::array<int, 5> d{};
  for (int n : per_rank) ++d[static_cast<std::size_t>(n)];
  return d;
}

}  // namespace

TEST_SUITE("cards") {

TEST_CASE("parsing") {
  CHECK(parse_card("As").rank() == 14);
  CHECK(parse_card("As").suit() == 3);
  CHECK(parse_card("Tc").index == 8);
  CHECK(parse_cards("AsKhQd").size() == 3);
  CHECK(cards_str(parse_cards("Ah 3d")) == "Ah 3d");
  CHECK_THROWS_AS(parse_card("Xs"), Error);
  CHECK_THROWS_AS(parse_cards("As As"), Error);
  const std::vector<Card> dup = {parse_card("As"), parse_card("As")};
  CHECK_THROWS_AS(card_mask(dup), Error);
}

TEST_CASE("five-card categories") {
  CHECK(evaluate5(parse_cards("As Ks Qs Js Ts")).category() == HandCategory::kRoyalFlush);
  const auto wheel = evaluate5(parse_cards("Ah 2d 3c 4s 5s"));
  CHECK(wheel.category() == HandCategory::kStraight);
  CHECK(wheel < evaluate5(parse_cards("2h 3d 4c 5s 6s")));

  std::map<HandCategory, int> counts;
  std::map<std::array<int, 5>, int> signatures;
  std::array<Card, 5> h;
  for (int a = 0; a < 52; ++a)
    for (int b = a + 1; b < 52; ++b)
      for (int c = b + 1; c < 52; ++c)
        for (int d = c + 1; d < 52; ++d)
          for (int e = d + 1; e < 52; ++e) {
            h = {Card(a), Card(b), Card(c), Card(d), Card(e)};
            ++counts[evaluate5(h).category()];
            ++signatures[signature_of(h)];
          }
  CHECK(counts[HandCategory::kQuads] == 624);
  CHECK(counts[HandCategory::kFullHouse] == 3744);
  CHECK(counts[HandCategory::kFlush] == 5108);
  CHECK(counts[HandCategory::kStraight] == 10200);
  CHECK(counts[HandCategory::kStraightFlush] == 36);
  CHECK(counts[HandCategory::kRoyalFlush] == 4);
  CHECK(counts[HandCategory::kOnePair] == 1098240);

  Rational total;
  for (const auto& sig : all_signatures()) {
    const Rational p = signature_probability(sig);
    CHECK(p * Rational(2598960) == Rational(signatures[sig.d]));
    total += p;
  }
  CHECK(total == Rational(1));
  CHECK(signature_probability(DenominationSignature{{11, 1, 0, 0, 1}}) == Rational(1, 4165));
  CHECK(signature_probability(DenominationSignature{{9, 3, 1, 0, 0}}) == Rational(1098240, 2598960));
}

TEST_CASE("seven-card evaluation") {
  std::mt19937_64 rng(99);
  std::vector<int> deck(52);
  for (int i = 0; i < 52; ++i) deck[static_cast<std::size_t>(i)] = i;
  for (int trial = 0; trial < 100000; ++trial) {
    for (int i = 0; i < 7; ++i) {
      std::uniform_int_distribution<int> pick(i, 51);
      std::swap(deck[static_cast<std::size_t>(i)], deck[static_cast<std::size_t>(pick(rng))]);
    }
    std::vector<Card> hand;
    for (int i = 0; i < 7; ++i) hand.emplace_back(deck[static_cast<std::size_t>(i)]);
    REQUIRE(evaluate7(hand) == evaluate7_by_subsets(hand));
  }
  CHECK(evaluate7(parse_cards("As Ks Qs Js Ts 2d 3c")).category() == HandCategory::kRoyalFlush);
  // The board plays: the hole cards add nothing to a board straight.
  const auto board_plays = evaluate7(parse_cards("2c 3d 9h Th Js Qc Kd"));
  CHECK(board_plays == evaluate5(parse_cards("9h Th Js Qc Kd")));
}

TEST_CASE("suit classes") {
  const auto hand = parse_cards("2c 5d 9h Jh As");
  const auto canon = suit_canonical(hand);
  CHECK(suit_canonical(canon) == canon);
  for (const auto& p : suit_permutations()) {
    std::vector<Card> image;
    for (const auto& c : hand) image.push_back(permute_suit(c, p));
    CHECK(suit_canonical(image) == canon);
  }
  std::unordered_set<std::uint64_t> seen;
  std::uint64_t weight = 0;
  for (const auto& cls : five_card_classes()) {
    weight += cls.weight;
    seen.insert(card_mask(cls.cards));
  }
  CHECK(five_card_classes().size() == 134459);
  CHECK(seen.size() == 134459);
  CHECK(weight == 2598960);
}

TEST_CASE("canonical forms over all hands") {
  std::unordered_set<std::uint64_t> forms;
  std::vector<Card> h(5);
  for (int a = 0; a < 52; ++a)
    for (int b = a + 1; b < 52; ++b)
      for (int c = b + 1; c < 52; ++c)
        for (int d = c + 1; d < 52; ++d)
          for (int e = d + 1; e < 52; ++e) {
            h = {Card(a), Card(b), Card(c), Card(d), Card(e)};
            forms.insert(card_mask(suit_canonical(h)));
          }
  CHECK(forms.size() == 134459);
}

}  // TEST_SUITE
