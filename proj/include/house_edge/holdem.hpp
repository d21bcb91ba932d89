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

#ifndef HOUSE_EDGE_HOLDEM_HPP_
#define HOUSE_EDGE_HOLDEM_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "house_edge/cards.hpp"
#include "house_edge/rational.hpp"

namespace house_edge::holdem {

enum class HoleKind { kPair, kSuited, kOffsuit };

struct HoleHandClass {
  int high = 14;  // rank of the higher card
  int low = 14;
  HoleKind kind = HoleKind::kPair;

  std::string name() const;  // "AA", "AKs", "T9o"
  int weight() const;        // 6, 4 or 12 combinations
  std::array<cards::Card, 2> representative() const;
  int index() const;  // 0..168

  friend auto operator<=>(const HoleHandClass&, const HoleHandClass&) = default;
};

HoleHandClass classify(std::span<const cards::Card> hole);
HoleHandClass parse_class(const std::string& name);
const std::vector<HoleHandClass>& all_classes();

struct MatchupResult {
  std::uint64_t wins = 0;
  std::uint64_t ties = 0;
  std::uint64_t losses = 0;
  std::uint64_t total = 0;

  // (wins - losses) / total in big blinds: each player posts 1, ties split.
  Rational net_gain() const;
};

// Every board from the 48 unseen cards.
MatchupResult matchup(std::span<const cards::Card> h1, std::span<const cards::Card> h2);

struct VsRandom {
  MatchupResult counts;         // summed over all 1225 opponent hands
  std::size_t matchups_run = 0;  // distinct matchups enumerated
  Rational net_gain() const { return counts.net_gain(); }
};

// Net gain against a uniformly random opponent. Opponents equivalent under
// the suit permutations fixing `hole` share one board enumeration.
VsRandom vs_random(std::span<const cards::Card> hole, unsigned threads = 1);

struct RankedHand {
  HoleHandClass hand;
  Rational net_gain;
  std::uint64_t wins = 0;
  std::uint64_t losses = 0;
  std::uint64_t total = 0;
};

// All 169 classes, best first, from one sweep over the board classes.
std::vector<RankedHand> rank_all(unsigned threads = 1);

// Unordered heads-up matchups up to suit permutation.
std::size_t matchup_class_count();

// Seeded Monte Carlo net gain for `players`-handed chance hold'em.
struct SimulationResult {
  double mean = 0;
  double standard_error = 0;
  std::uint64_t trials = 0;
};
SimulationResult simulate_vs_random(std::span<const cards::Card> hole, int players, std::uint64_t trials,
                                    std::uint64_t seed);

}  // namespace house_edge::holdem

#endif  // HOUSE_EDGE_HOLDEM_HPP_
