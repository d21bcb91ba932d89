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

#include "house_edge/cards.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "house_edge/combinatorics.hpp"
#include "house_edge/error.hpp"

namespace house_edge::cards {

namespace {

constexpr std::string_view kRanks = "23456789TJQKA";
constexpr std::string_view kSuits = "cdhs";

std::uint32_t pack(HandCategory c, std::initializer_list<int> ranks) {
  std::uint32_t code = static_cast<std::uint32_t>(c) << 20;
  int shift = 16;
  for (int r : ranks) {
    code |= static_cast<std::uint32_t>(r) << shift;
    shift -= 4;
  }
  return code;
}

}  // namespace

std::string Card::str() const { return {kRanks[rank() - 2], kSuits[suit()]}; }

Card parse_card(std::string_view text) {
  if (text.size() != 2) throw Error(ErrorCode::kParse, "bad card '" + std::string(text) + "'");
  const char r = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  const char s = static_cast<char>(std::tolower(static_cast<unsigned char>(text[1])));
  const auto ri = kRanks.find(r);
  const auto si = kSuits.find(s);
  if (ri == std::string_view::npos || si == std::string_view::npos) {
    throw Error(ErrorCode::kParse, "bad card '" + std::string(text) + "'");
  }
  return Card(static_cast<int>(ri) + 2, static_cast<int>(si));
}

std::vector<Card> parse_cards(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != ',' && c != '\t') compact.push_back(c);
  }
  if (compact.size() % 2 != 0) throw Error(ErrorCode::kParse, "bad card list '" + std::string(text) + "'");
  std::vector<Card> out;
  for (std::size_t i = 0; i < compact.size(); i += 2) out.push_back(parse_card(std::string_view(compact).substr(i, 2)));
  card_mask(out);
  return out;
}

std::string cards_str(std::span<const Card> cards) {
  std::string s;
  for (const Card& c : cards) {
    if (!s.empty()) s += ' ';
    s += c.str();
  }
  return s;
}

std::uint64_t card_mask(std::span<const Card> cards) {
  std::uint64_t mask = 0;
  for (const Card& c : cards) {
    if (c.index < 0 || c.index >= 52) throw Error(ErrorCode::kParse, "card out of range");
    const std::uint64_t bit = std::uint64_t{1} << c.index;
    if (mask & bit) throw Error(ErrorCode::kDuplicateCard, "duplicate card " + c.str());
    mask |= bit;
  }
  return mask;
}

std::string category_name(HandCategory c) {
  switch (c) {
    case HandCategory::kHighCard: return "high card";
    case HandCategory::kOnePair: return "one pair";
    case HandCategory::kTwoPairs: return "two pairs";
    case HandCategory::kTrips: return "three of a kind";
    case HandCategory::kStraight: return "straight";
    case HandCategory::kFlush: return "flush";
    case HandCategory::kFullHouse: return "full house";
    case HandCategory::kQuads: return "four of a kind";
    case HandCategory::kStraightFlush: return "straight flush";
    case HandCategory::kRoyalFlush: return "royal flush";
  }
  return "?";
}

std::array<int, 5> HandValue::tiebreak() const {
  std::array<int, 5> out{};
  for (int i = 0; i < 5; ++i) out[i] = static_cast<int>((code >> (16 - 4 * i)) & 0xF);
  return out;
}

HandValue evaluate5(std::span<const Card> hand) {
  if (hand.size() != 5) throw Error(ErrorCode::kInvalidParameters, "evaluate5 needs five cards");
  card_mask(hand);
  std::array<int, 15> count{};
  bool flush = true;
  for (const Card& c : hand) {
    ++count[c.rank()];
    if (c.suit() != hand[0].suit()) flush = false;
  }
  // Ranks ordered by multiplicity, then by rank.
  std::vector<std::pair<int, int>> groups;
  for (int r = 14; r >= 2; --r) {
    if (count[r]) groups.emplace_back(count[r], r);
  }
  std::stable_sort(groups.begin(), groups.end(), [](auto a, auto b) { return a.first > b.first; });

  int straight_high = 0;
  if (groups.size() == 5) {
    if (groups[0].second - groups[4].second == 4) straight_high = groups[0].second;
    if (groups[0].second == 14 && groups[1].second == 5) straight_high = 5;
  }
  if (straight_high && flush) {
    return {pack(straight_high == 14 ? HandCategory::kRoyalFlush : HandCategory::kStraightFlush, {straight_high})};
  }
  if (groups[0].first == 4) return {pack(HandCategory::kQuads, {groups[0].second, groups[1].second})};
  if (groups[0].first == 3 && groups[1].first == 2) {
    return {pack(HandCategory::kFullHouse, {groups[0].second, groups[1].second})};
  }
  const auto& g = groups;
  if (flush) return {pack(HandCategory::kFlush, {g[0].second, g[1].second, g[2].second, g[3].second, g[4].second})};
  if (straight_high) return {pack(HandCategory::kStraight, {straight_high})};
  if (g[0].first == 3) return {pack(HandCategory::kTrips, {g[0].second, g[1].second, g[2].second})};
  if (g[0].first == 2 && g[1].first == 2) return {pack(HandCategory::kTwoPairs, {g[0].second, g[1].second, g[2].second})};
  if (g[0].first == 2) return {pack(HandCategory::kOnePair, {g[0].second, g[1].second, g[2].second, g[3].second})};
  return {pack(HandCategory::kHighCard, {g[0].second, g[1].second, g[2].second, g[3].second, g[4].second})};
}

namespace {

// Highest straight in a 13-bit rank mask (bit 0 = deuce), 0 if none.
int straight_high(std::uint32_t m) {
  const std::uint32_t ext = (m << 1) | ((m >> 12) & 1);  // bit 0 = ace low
  const std::uint32_t run = ext & (ext << 1) & (ext << 2) & (ext << 3) & (ext << 4);
  return run ? std::bit_width(run) : 0;  // bit j means high rank j + 1
}

int top_rank(std::uint32_t& m) {
  const int bit = std::bit_width(m) - 1;
  m &= ~(1u << bit);
  return bit + 2;
}

}  // namespace

HandValue evaluate7_mask(std::uint64_t mask) {
  std::array<std::uint32_t, 4> suit;
  for (int s = 0; s < 4; ++s) suit[s] = static_cast<std::uint32_t>((mask >> (13 * s)) & 0x1FFF);

  for (int s = 0; s < 4; ++s) {
    if (std::popcount(suit[s]) >= 5) {
      const int high = straight_high(suit[s]);
      if (high == 14) return {pack(HandCategory::kRoyalFlush, {14})};
      if (high) return {pack(HandCategory::kStraightFlush, {high})};
      std::uint32_t m = suit[s];
      const int a = top_rank(m), b = top_rank(m), c = top_rank(m), d = top_rank(m), e = top_rank(m);
      return {pack(HandCategory::kFlush, {a, b, c, d, e})};
    }
  }

  // Bit-sliced rank counts.
  const std::uint32_t any = suit[0] | suit[1] | suit[2] | suit[3];
  const std::uint32_t quads = suit[0] & suit[1] & suit[2] & suit[3];
  std::uint32_t b0 = 0;
  std::uint32_t b1 = 0;
  for (std::uint32_t x : suit) {
    b1 ^= b0 & x;
    b0 ^= x;
  }
  const std::uint32_t trips = b0 & b1;
  const std::uint32_t pairs = ~b0 & b1 & ~quads & 0x1FFF;

  if (quads) {
    std::uint32_t q = quads;
    const int r = top_rank(q);
    std::uint32_t rest = any & ~(1u << (r - 2));
    return {pack(HandCategory::kQuads, {r, top_rank(rest)})};
  }
  if (trips && (std::popcount(trips) >= 2 || pairs)) {
    std::uint32_t t = trips;
    const int r = top_rank(t);
    std::uint32_t second = t | pairs;
    return {pack(HandCategory::kFullHouse, {r, top_rank(second)})};
  }
  if (const int high = straight_high(any)) return {pack(HandCategory::kStraight, {high})};
  if (trips) {
    std::uint32_t t = trips;
    const int r = top_rank(t);
    std::uint32_t rest = any & ~trips;
    const int a = top_rank(rest), b = top_rank(rest);
    return {pack(HandCategory::kTrips, {r, a, b})};
  }
  if (std::popcount(pairs) >= 2) {
    std::uint32_t p = pairs;
    const int hi = top_rank(p), lo = top_rank(p);
    std::uint32_t rest = any & ~(1u << (hi - 2)) & ~(1u << (lo - 2));
    return {pack(HandCategory::kTwoPairs, {hi, lo, top_rank(rest)})};
  }
  if (pairs) {
    std::uint32_t p = pairs;
    const int r = top_rank(p);
    std::uint32_t rest = any & ~pairs;
    const int a = top_rank(rest), b = top_rank(rest), c = top_rank(rest);
    return {pack(HandCategory::kOnePair, {r, a, b, c})};
  }
  std::uint32_t m = any;
  const int a = top_rank(m), b = top_rank(m), c = top_rank(m), d = top_rank(m), e = top_rank(m);
  return {pack(HandCategory::kHighCard, {a, b, c, d, e})};
}

HandValue evaluate7(std::span<const Card> hand) {
  if (hand.size() != 7) throw Error(ErrorCode::kInvalidParameters, "evaluate7 needs seven cards");
  return evaluate7_mask(card_mask(hand));
}

HandValue evaluate7_by_subsets(std::span<const Card> hand) {
  if (hand.size() != 7) throw Error(ErrorCode::kInvalidParameters, "evaluate7 needs seven cards");
  card_mask(hand);
  HandValue best;
  std::array<bool, 7> pick{true, true, true, true, true, false, false};
  do {
    std::array<Card, 5> five;
    int n = 0;
    for (int i = 0; i < 7; ++i) {
      if (pick[i]) five[n++] = hand[i];
    }
    best = std::max(best, evaluate5(five));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

Rational signature_probability(const DenominationSignature& sig) {
  int denominations = 0;
  int cards = 0;
  for (int i = 0; i < 5; ++i) {
    if (sig.d[i] < 0) throw Error(ErrorCode::kInvalidSignature, "negative signature entry");
    denominations += sig.d[i];
    cards += i * sig.d[i];
  }
  if (denominations != 13 || cards != 5) throw Error(ErrorCode::kInvalidSignature, "signature must cover 13 ranks, 5 cards");
  std::array<unsigned, 5> parts;
  for (int i = 0; i < 5; ++i) parts[i] = static_cast<unsigned>(sig.d[i]);
  BigInt ways = multinomial(13, parts);
  for (int i = 0; i < 5; ++i) {
    for (int k = 0; k < sig.d[i]; ++k) ways *= binomial(4, i);
  }
  return Rational(ways, binomial(52, 5));
}

std::vector<DenominationSignature> all_signatures() {
  std::vector<DenominationSignature> out;
  for (int d4 = 0; d4 <= 1; ++d4) {
    for (int d3 = 0; 3 * d3 + 4 * d4 <= 5; ++d3) {
      for (int d2 = 0; 2 * d2 + 3 * d3 + 4 * d4 <= 5; ++d2) {
        const int d1 = 5 - 2 * d2 - 3 * d3 - 4 * d4;
        out.push_back({{13 - d1 - d2 - d3 - d4, d1, d2, d3, d4}});
      }
    }
  }
  return out;
}

const std::array<std::array<int, 4>, 24>& suit_permutations() {
  static const auto kPerms = [] {
    std::array<std::array<int, 4>, 24> perms;
    std::array<int, 4> p{0, 1, 2, 3};
    int n = 0;
    do {
      perms[n++] = p;
    } while (std::next_permutation(p.begin(), p.end()));
    return perms;
  }();
  return kPerms;
}

std::vector<Card> suit_canonical(std::span<const Card> hand) {
  card_mask(hand);
  std::vector<Card> best;
  std::vector<Card> img(hand.size());
  for (const auto& perm : suit_permutations()) {
    for (std::size_t i = 0; i < hand.size(); ++i) img[i] = permute_suit(hand[i], perm);
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = img;
  }
  return best;
}

const std::vector<HandClass>& five_card_classes() {
  static const std::vector<HandClass> kClasses = [] {
    const auto& perms = suit_permutations();
    std::array<std::array<int, 52>, 24> image;
    for (int p = 0; p < 24; ++p) {
      for (int c = 0; c < 52; ++c) image[p][c] = permute_suit(Card(c), perms[p]).index;
    }
    std::vector<HandClass> out;
    std::array<int, 5> h;
    for (h[0] = 0; h[0] < 48; ++h[0]) {
      for (h[1] = h[0] + 1; h[1] < 49; ++h[1]) {
        for (h[2] = h[1] + 1; h[2] < 50; ++h[2]) {
          for (h[3] = h[2] + 1; h[3] < 51; ++h[3]) {
            for (h[4] = h[3] + 1; h[4] < 52; ++h[4]) {
              int stabilizer = 0;
              bool canonical = true;
              for (int p = 0; p < 24 && canonical; ++p) {
                std::array<int, 5> img;
                for (int i = 0; i < 5; ++i) img[i] = image[p][h[i]];
                std::sort(img.begin(), img.end());
                if (img < h) canonical = false;
                else if (img == h) ++stabilizer;
              }
              if (!canonical) continue;
              HandClass hc;
              for (int i = 0; i < 5; ++i) hc.cards[i] = Card(h[i]);
              hc.weight = static_cast<std::uint32_t>(24 / stabilizer);
              out.push_back(hc);
            }
          }
        }
      }
    }
    return out;
  }();
  return kClasses;
}

}  // namespace house_edge::cards
