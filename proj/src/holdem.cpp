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

#include "house_edge/holdem.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "house_edge/error.hpp"

namespace house_edge::holdem {

using cards::Card;

namespace {

constexpr std::string_view kRankChars = "23456789TJQKA";

std::uint64_t bit(int c) { return std::uint64_t{1} << c; }

std::array<Card, 2> two_cards(std::span<const Card> hole) {
  if (hole.size() != 2) throw Error(ErrorCode::kInvalidParameters, "a hole hand has two cards");
  cards::card_mask(hole);
  return {hole[0], hole[1]};
}

}  // namespace

std::string HoleHandClass::name() const {
  std::string s{kRankChars[high - 2], kRankChars[low - 2]};
  if (kind == HoleKind::kSuited) s += 's';
  if (kind == HoleKind::kOffsuit) s += 'o';
  return s;
}

int HoleHandClass::weight() const { return kind == HoleKind::kPair ? 6 : (kind == HoleKind::kSuited ? 4 : 12); }

std::array<Card, 2> HoleHandClass::representative() const {
  switch (kind) {
    case HoleKind::kPair: return {Card(high, 3), Card(low, 2)};
    case HoleKind::kSuited: return {Card(high, 3), Card(low, 3)};
    case HoleKind::kOffsuit: return {Card(high, 3), Card(low, 2)};
  }
  return {};
}

const std::vector<HoleHandClass>& all_classes() {
  static const std::vector<HoleHandClass> kAll = [] {
    std::vector<HoleHandClass> out;
    for (int r = 14; r >= 2; --r) out.push_back({r, r, HoleKind::kPair});
    for (int hi = 14; hi >= 2; --hi) {
      for (int lo = hi - 1; lo >= 2; --lo) out.push_back({hi, lo, HoleKind::kSuited});
    }
    for (int hi = 14; hi >= 2; --hi) {
      for (int lo = hi - 1; lo >= 2; --lo) out.push_back({hi, lo, HoleKind::kOffsuit});
    }
    return out;
  }();
  return kAll;
}

int HoleHandClass::index() const {
  const auto& all = all_classes();
  return static_cast<int>(std::find(all.begin(), all.end(), *this) - all.begin());
}

HoleHandClass classify(std::span<const Card> hole) {
  const auto h = two_cards(hole);
  const int hi = std::max(h[0].rank(), h[1].rank());
  const int lo = std::min(h[0].rank(), h[1].rank());
  if (hi == lo) return {hi, lo, HoleKind::kPair};
  return {hi, lo, h[0].suit() == h[1].suit() ? HoleKind::kSuited : HoleKind::kOffsuit};
}

HoleHandClass parse_class(const std::string& name) {
  auto rank = [&](char c) {
    const auto i = kRankChars.find(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (i == std::string_view::npos) throw Error(ErrorCode::kParse, "bad hand class '" + name + "'");
    return static_cast<int>(i) + 2;
  };
  if (name.size() < 2 || name.size() > 3) throw Error(ErrorCode::kParse, "bad hand class '" + name + "'");
  int a = rank(name[0]);
  int b = rank(name[1]);
  if (a < b) std::swap(a, b);
  if (a == b) {
    if (name.size() != 2) throw Error(ErrorCode::kParse, "bad hand class '" + name + "'");
    return {a, b, HoleKind::kPair};
  }
  if (name.size() != 3 || (name[2] != 's' && name[2] != 'o')) {
    throw Error(ErrorCode::kParse, "non-pair classes end in s or o");
  }
  return {a, b, name[2] == 's' ? HoleKind::kSuited : HoleKind::kOffsuit};
}

Rational MatchupResult::net_gain() const {
  if (total == 0) return Rational(0);
  return Rational(BigInt(static_cast<unsigned long>(wins)) - BigInt(static_cast<unsigned long>(losses)),
                  BigInt(static_cast<unsigned long>(total)));
}

MatchupResult matchup(std::span<const Card> h1, std::span<const Card> h2) {
  const auto a = two_cards(h1);
  const auto b = two_cards(h2);
  const std::uint64_t m1 = bit(a[0].index) | bit(a[1].index);
  const std::uint64_t m2 = bit(b[0].index) | bit(b[1].index);
  if (m1 & m2) throw Error(ErrorCode::kDuplicateCard, "the hands share a card");
  std::vector<int> deck;
  for (int c = 0; c < 52; ++c) {
    if (!((m1 | m2) & bit(c))) deck.push_back(c);
  }
  MatchupResult r;
  const int n = static_cast<int>(deck.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::uint64_t bj = bit(deck[i]) | bit(deck[j]);
      for (int k = j + 1; k < n; ++k) {
        const std::uint64_t bk = bj | bit(deck[k]);
        for (int l = k + 1; l < n; ++l) {
          const std::uint64_t bl = bk | bit(deck[l]);
          for (int m = l + 1; m < n; ++m) {
            const std::uint64_t board = bl | bit(deck[m]);
            const auto v1 = cards::evaluate7_mask(board | m1);
            const auto v2 = cards::evaluate7_mask(board | m2);
            if (v1 > v2) ++r.wins;
            else if (v1 < v2) ++r.losses;
            else ++r.ties;
          }
        }
      }
    }
  }
  r.total = r.wins + r.ties + r.losses;
  return r;
}

namespace {

void add(MatchupResult& into, const MatchupResult& r, std::uint64_t times) {
  into.wins += r.wins * times;
  into.ties += r.ties * times;
  into.losses += r.losses * times;
  into.total += r.total * times;
}

template <typename F>
void parallel_for(std::size_t n, unsigned threads, F&& f) {
  threads = std::max(1u, threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) f(i, 0u);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += threads) f(i, t);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

VsRandom vs_random(std::span<const Card> hole, unsigned threads) {
  const auto h = two_cards(hole);
  const std::uint64_t hm = bit(h[0].index) | bit(h[1].index);
  std::vector<std::array<int, 4>> stabilizer;
  for (const auto& p : cards::suit_permutations()) {
    const std::uint64_t img = bit(cards::permute_suit(h[0], p).index) | bit(cards::permute_suit(h[1], p).index);
    if (img == hm) stabilizer.push_back(p);
  }
  // Group opponents by their least image under the stabilizer.
  std::map<std::pair<int, int>, std::uint64_t> groups;
  for (int a = 0; a < 52; ++a) {
    for (int b = a + 1; b < 52; ++b) {
      if (hm & (bit(a) | bit(b))) continue;
      std::pair<int, int> best{99, 99};
      for (const auto& p : stabilizer) {
        int x = cards::permute_suit(Card(a), p).index;
        int y = cards::permute_suit(Card(b), p).index;
        if (x > y) std::swap(x, y);
        best = std::min(best, std::make_pair(x, y));
      }
      ++groups[best];
    }
  }
  std::vector<std::pair<std::pair<int, int>, std::uint64_t>> list(groups.begin(), groups.end());
  std::vector<MatchupResult> results(list.size());
  parallel_for(list.size(), threads, [&](std::size_t i, unsigned) {
    const std::array<Card, 2> opp{Card(list[i].first.first), Card(list[i].first.second)};
    results[i] = matchup(h, opp);
  });
  VsRandom out;
  for (std::size_t i = 0; i < list.size(); ++i) add(out.counts, results[i], list[i].second);
  out.matchups_run = list.size();
  return out;
}

std::vector<RankedHand> rank_all(unsigned threads) {
  // class_of[a][b]: index of the class of hole cards a, b.
  static const auto class_of = [] {
    std::array<std::array<std::uint8_t, 52>, 52> t{};
    for (int a = 0; a < 52; ++a) {
      for (int b = 0; b < 52; ++b) {
        if (a == b) continue;
        const std::array<Card, 2> hole{Card(a), Card(b)};
        t[a][b] = static_cast<std::uint8_t>(classify(hole).index());
      }
    }
    return t;
  }();
  const auto& boards = cards::five_card_classes();
  threads = std::max(1u, threads);
  struct Acc {
    std::array<std::int64_t, 169> wins{};
    std::array<std::int64_t, 169> losses{};
  };
  std::vector<Acc> acc(threads);
  parallel_for(boards.size(), threads, [&](std::size_t bi, unsigned t) {
    const auto& bc = boards[bi];
    std::uint64_t bm = 0;
    for (const Card& c : bc.cards) bm |= bit(c.index);
    std::array<int, 47> rem;
    int n = 0;
    for (int c = 0; c < 52; ++c) {
      if (!(bm & bit(c))) rem[n++] = c;
    }
    std::array<std::uint32_t, 1081> value;
    std::array<std::array<std::uint32_t, 46>, 47> per_card;
    std::array<int, 47> fill{};
    int p = 0;
    for (int i = 0; i < 47; ++i) {
      for (int j = i + 1; j < 47; ++j) {
        const std::uint32_t v = cards::evaluate7_mask(bm | bit(rem[i]) | bit(rem[j])).code;
        value[p++] = v;
        per_card[i][fill[i]++] = v;
        per_card[j][fill[j]++] = v;
      }
    }
    std::array<std::uint32_t, 1081> sorted = value;
    std::sort(sorted.begin(), sorted.end());
    for (auto& l : per_card) std::sort(l.begin(), l.end());
    auto below = [](const auto& v, std::uint32_t x) {
      return static_cast<std::int64_t>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
    };
    auto above = [](const auto& v, std::uint32_t x) {
      return static_cast<std::int64_t>(v.end() - std::upper_bound(v.begin(), v.end(), x));
    };
    Acc& a = acc[t];
    const std::int64_t w = bc.weight;
    p = 0;
    for (int i = 0; i < 47; ++i) {
      for (int j = i + 1; j < 47; ++j) {
        const std::uint32_t v = value[p++];
        // Opponents sharing a card with the hero are removed by inclusion-exclusion.
        const std::int64_t wins = below(sorted, v) - below(per_card[i], v) - below(per_card[j], v);
        const std::int64_t losses = above(sorted, v) - above(per_card[i], v) - above(per_card[j], v);
        const int k = class_of[rem[i]][rem[j]];
        a.wins[k] += w * wins;
        a.losses[k] += w * losses;
      }
    }
  });
  // Each hero faces C(50,2) opponents and C(48,5) boards.
  const std::int64_t per_hero = 1225LL * 1712304LL;
  std::vector<RankedHand> out;
  for (const auto& cls : all_classes()) {
    const int k = cls.index();
    RankedHand r;
    r.hand = cls;
    for (const Acc& a : acc) {
      r.wins += static_cast<std::uint64_t>(a.wins[k]);
      r.losses += static_cast<std::uint64_t>(a.losses[k]);
    }
    r.total = static_cast<std::uint64_t>(per_hero) * cls.weight();
    r.net_gain = Rational(BigInt(static_cast<unsigned long>(r.wins)) - BigInt(static_cast<unsigned long>(r.losses)),
                          BigInt(static_cast<unsigned long>(r.total)));
    out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(), [](const RankedHand& a, const RankedHand& b) { return a.net_gain > b.net_gain; });
  return out;
}

std::size_t matchup_class_count() {
  std::vector<char> seen(std::size_t{1} << 24, 0);
  const auto& perms = cards::suit_permutations();
  std::array<std::array<int, 52>, 24> image;
  for (int p = 0; p < 24; ++p) {
    for (int c = 0; c < 52; ++c) image[p][c] = cards::permute_suit(Card(c), perms[p]).index;
  }
  auto key = [](int a0, int a1, int b0, int b1) {
    if (a0 > a1) std::swap(a0, a1);
    if (b0 > b1) std::swap(b0, b1);
    return static_cast<std::uint32_t>(a0 | a1 << 6 | b0 << 12 | b1 << 18);
  };
  std::size_t count = 0;
  for (int a0 = 0; a0 < 52; ++a0) {
    for (int a1 = a0 + 1; a1 < 52; ++a1) {
      for (int b0 = a0 + 1; b0 < 52; ++b0) {
        for (int b1 = b0 + 1; b1 < 52; ++b1) {
          // Disjoint hands, each unordered pair once (b0 > a0).
          if (b0 == a0 || b0 == a1 || b1 == a1) continue;
          std::uint32_t best = UINT32_MAX;
          for (int p = 0; p < 24; ++p) {
            const int x0 = image[p][a0], x1 = image[p][a1], y0 = image[p][b0], y1 = image[p][b1];
            best = std::min({best, key(x0, x1, y0, y1), key(y0, y1, x0, x1)});
          }
          if (!seen[best]) {
            seen[best] = 1;
            ++count;
          }
        }
      }
    }
  }
  return count;
}

SimulationResult simulate_vs_random(std::span<const Card> hole, int players, std::uint64_t trials,
                                    std::uint64_t seed) {
  const auto h = two_cards(hole);
  if (players < 2 || players > 23) throw Error(ErrorCode::kInvalidParameters, "players must be 2..23");
  const std::uint64_t hm = bit(h[0].index) | bit(h[1].index);
  std::vector<int> deck;
  for (int c = 0; c < 52; ++c) {
    if (!(hm & bit(c))) deck.push_back(c);
  }
  std::mt19937_64 rng(seed);
  const int needed = 5 + 2 * (players - 1);
  double sum = 0;
  double sum_sq = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (int i = 0; i < needed; ++i) {
      std::uniform_int_distribution<int> pick(i, static_cast<int>(deck.size()) - 1);
      std::swap(deck[i], deck[pick(rng)]);
    }
    std::uint64_t board = 0;
    for (int i = 0; i < 5; ++i) board |= bit(deck[i]);
    const auto mine = cards::evaluate7_mask(board | hm);
    int tied = 1;
    bool lost = false;
    for (int o = 0; o < players - 1 && !lost; ++o) {
      const auto v = cards::evaluate7_mask(board | bit(deck[5 + 2 * o]) | bit(deck[6 + 2 * o]));
      if (v > mine) lost = true;
      else if (v == mine) ++tied;
    }
    const double net = lost ? -1.0 : static_cast<double>(players) / tied - 1.0;
    sum += net;
    sum_sq += net * net;
  }
  SimulationResult r;
  r.trials = trials;
  if (trials > 0) {
    r.mean = sum / static_cast<double>(trials);
    const double var = std::max(0.0, sum_sq / static_cast<double>(trials) - r.mean * r.mean);
    r.standard_error = std::sqrt(var / static_cast<double>(trials));
  }
  return r;
}

}  // namespace house_edge::holdem
