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
#include "house_edge/cards.hpp"
#include "house_edge/error.hpp"
#include "house_edge/holdem.hpp"

using namespace house_edge;
using namespace house_edge::holdem;
using cards::Card;

TEST_SUITE("holdem") {

TEST_CASE("starting-hand classes") {
  const auto& all = all_classes();
  CHECK(all.size() == 169);
  int combos = 0;
  for (const auto& c : all) combos += c.weight();
  CHECK(combos == 1326);
  CHECK(parse_class("AKs").kind == HoleKind::kSuited);
  CHECK(parse_class("T9o").weight() == 12);
  CHECK(classify(cards::parse_cards("8h 8d")).name() == "88");
  CHECK(classify(cards::parse_cards("Kd As")).name() == "AKo");
  for (const auto& c : all) {
    const auto rep = c.representative();
    CHECK(classify(rep) == c);
    CHECK(all[static_cast<std::size_t>(c.index())] == c);
  }
  CHECK_THROWS_AS(parse_class("AAs"), Error);
}

TEST_CASE("matchups") {
  const auto mirror = matchup(cards::parse_cards("As Kd"), cards::parse_cards("Ah Kc"));
  CHECK(mirror.total == 1712304);
  CHECK(mirror.wins == mirror.losses);
  CHECK(mirror.net_gain() == Rational(0));

  const auto h1 = cards::parse_cards("As Ks");
  const auto h2 = cards::parse_cards("8h 8d");
  const auto r = matchup(h1, h2);
  CHECK(r.total == 1712304);
  CHECK(r.wins + r.ties + r.losses == r.total);
  const auto rev = matchup(h2, h1);
  CHECK(rev.wins == r.losses);
  CHECK(rev.ties == r.ties);

  // Random boards scored with the 21-subset evaluator.
  std::vector<int> rest;
  const std::uint64_t used = cards::card_mask(h1) | cards::card_mask(h2);
  for (int i = 0; i < 52; ++i) {
    if (!(used >> i & 1)) rest.push_back(i);
  }
  std::mt19937_64 rng(21);
  const int n = 60000;
  int wins = 0;
  for (int t = 0; t < n; ++t) {
    for (int i = 0; i < 5; ++i) {
      std::uniform_int_distribution<int> pick(i, static_cast<int>(rest.size()) - 1);
      std::swap(rest[static_cast<std::size_t>(i)], rest[static_cast<std::size_t>(pick(rng))]);
    }
    std::vector<Card> a(h1.begin(), h1.end()), b(h2.begin(), h2.end());
    for (int i = 0; i < 5; ++i) {
      a.emplace_back(rest[static_cast<std::size_t>(i)]);
      b.emplace_back(rest[static_cast<std::size_t>(i)]);
    }
    wins += cards::evaluate7_by_subsets(a) > cards::evaluate7_by_subsets(b);
  }
  const double p = static_cast<double>(r.wins) / static_cast<double>(r.total);
  CHECK(std::abs(wins / double(n) - p) < 4 * std::sqrt(p * (1 - p) / n));
}

TEST_CASE("matchup classes") { CHECK(matchup_class_count() == 47008); }

TEST_CASE("seeded simulation") {
  const auto hole = cards::parse_cards("Ac Ad");
  const auto a = simulate_vs_random(hole, 2, 20000, 3);
  const auto b = simulate_vs_random(hole, 2, 20000, 3);
  CHECK(a.mean == b.mean);
  CHECK(std::abs(a.mean - 0.704074) < 4 * a.standard_error);
}

}  // TEST_SUITE
