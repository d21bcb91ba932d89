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

#include "house_edge/videopoker.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <thread>

#include "house_edge/combinatorics.hpp"
#include "house_edge/error.hpp"

namespace house_edge::videopoker {

using cards::Card;
using i128 = __int128;

namespace {

constexpr std::array<const char*, kPayClasses> kClassNames{
    "other",    "jacks or better", "two pairs",      "three of a kind", "straight",
    "flush",    "full house",      "four of a kind", "straight flush",  "royal flush",
};

BigInt to_big(i128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  BigInt out = (hi << 64) + lo;
  return negative ? BigInt(-out) : out;
}

// Calls f(indices) for every r-subset of 0..n-1, in lexicographic order.
template <typename F>
void for_each_combination(int n, int r, F&& f) {
  std::array<int, 5> idx{};
  if (r == 0) {
    f(idx, 0);
    return;
  }
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    f(idx, r);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::int64_t choose47(int k) { return static_cast<std::int64_t>(choose(47, k)); }

// Pay table scaled to integers by the common denominator.
struct IntegerPays {
  std::array<std::int64_t, kPayClasses> pay{};
  BigInt scale{1};
};

IntegerPays integer_pays(const PayTable& pt) {
  IntegerPays ip;
  for (const auto& r : pt.returns) ip.scale = lcm(ip.scale, r.denominator());
  for (int c = 0; c < kPayClasses; ++c) {
    const BigInt v = pt.returns[c].numerator() * (ip.scale / pt.returns[c].denominator());
    if (!v.fits_slong_p() || v > BigInt(1000000000L)) throw Error(ErrorCode::kInvalidPaytable, "pay table entries too large");
    ip.pay[c] = v.get_si();
  }
  return ip;
}

}  // namespace

std::string pay_class_name(int c) { return c >= 0 && c < kPayClasses ? kClassNames[c] : "?"; }

PayClass pay_class(cards::HandValue v) {
  using cards::HandCategory;
  switch (v.category()) {
    case HandCategory::kHighCard: return kNothing;
    case HandCategory::kOnePair: return v.tiebreak()[0] >= 11 ? kJacksOrBetter : kNothing;
    case HandCategory::kTwoPairs: return kTwoPairs;
    case HandCategory::kTrips: return kTrips;
    case HandCategory::kStraight: return kStraight;
    case HandCategory::kFlush: return kFlush;
    case HandCategory::kFullHouse: return kFullHouse;
    case HandCategory::kQuads: return kQuads;
    case HandCategory::kStraightFlush: return kStraightFlush;
    case HandCategory::kRoyalFlush: return kRoyalFlush;
  }
  return kNothing;
}

PayClass pay_class_of_mask(std::uint64_t five_card_mask) { return pay_class(cards::evaluate7_mask(five_card_mask)); }

PayTable make_paytable(std::string name, std::array<Rational, kPayClasses> returns) {
  if (!returns[kNothing].is_zero()) throw Error(ErrorCode::kInvalidPaytable, "'other' must pay 0");
  for (int c = 1; c < kPayClasses; ++c) {
    if (returns[c].sign() < 0) throw Error(ErrorCode::kInvalidPaytable, "negative return");
    if (returns[c] < returns[c - 1]) {
      throw Error(ErrorCode::kInvalidPaytable, pay_class_name(c) + " pays less than " + pay_class_name(c - 1));
    }
  }
  return PayTable{std::move(name), std::move(returns)};
}

PayTable preset_paytable(const std::string& name) {
  auto table = [&](int royal, int full_house, int flush) {
    return make_paytable(name, {Rational(0), Rational(1), Rational(2), Rational(3), Rational(4), Rational(flush),
                                Rational(full_house), Rational(25), Rational(50), Rational(royal)});
  };
  if (name == "9-6") return table(800, 9, 6);
  if (name == "9-6-940") return table(940, 9, 6);
  if (name == "8-5") return table(800, 8, 5);
  if (name == "8-5-2500") return table(2500, 8, 5);
  throw Error(ErrorCode::kInvalidPaytable, "unknown pay table '" + name + "'");
}

std::vector<std::string> preset_names() { return {"9-6", "9-6-940", "8-5", "8-5-2500"}; }

PayTable paytable_from_json(const nlohmann::json& j) {
  try {
    std::array<Rational, kPayClasses> returns{};
    const auto& r = j.at("returns");
    for (int c = 1; c < kPayClasses; ++c) {
      const auto& v = r.at(kClassNames[c]);
      returns[c] = v.is_string() ? Rational::parse(v.get<std::string>()) : Rational(v.get<long long>());
    }
    return make_paytable(j.value("name", std::string("custom")), returns);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("pay table file: ") + e.what());
  }
}

nlohmann::json paytable_json(const PayTable& pt) {
  nlohmann::json returns = nlohmann::json::object();
  for (int c = kPayClasses - 1; c >= 0; --c) returns[kClassNames[c]] = pt.returns[c].str();
  return {{"name", pt.name}, {"returns", returns}};
}

Rational hold_ev(std::span<const Card> hand, unsigned mask, const PayTable& pt) {
  if (hand.size() != 5 || mask > 31) throw Error(ErrorCode::kInvalidParameters, "need five cards and a 5-bit mask");
  const std::uint64_t used = cards::card_mask(hand);
  std::vector<Card> held;
  for (int i = 0; i < 5; ++i) {
    if (mask & (1u << i)) held.push_back(hand[i]);
  }
  std::vector<Card> deck;
  for (int c = 0; c < 52; ++c) {
    if (!(used & (std::uint64_t{1} << c))) deck.emplace_back(c);
  }
  const int draw = 5 - static_cast<int>(held.size());
  Rational total;
  std::uint64_t n = 0;
  std::array<std::uint64_t, kPayClasses> counts{};
  for_each_combination(47, draw, [&](const std::array<int, 5>& idx, int r) {
    std::array<Card, 5> five;
    std::copy(held.begin(), held.end(), five.begin());
    for (int i = 0; i < r; ++i) five[held.size() + i] = deck[idx[i]];
    ++counts[pay_class(cards::evaluate5(five))];
    ++n;
  });
  for (int c = 0; c < kPayClasses; ++c) total += pt.returns[c] * Rational(static_cast<long long>(counts[c]));
  return total / Rational(static_cast<long long>(n));
}

std::string mask_cards(std::span<const Card> hand, unsigned mask) {
  std::vector<Card> held;
  for (std::size_t i = 0; i < hand.size(); ++i) {
    if (mask & (1u << i)) held.push_back(hand[i]);
  }
  return held.empty() ? std::string("(discard all)") : cards::cards_str(held);
}

namespace {

// Completion counts per pay class for each of the 32 holds.
using HoldCounts = std::array<std::array<std::int64_t, kPayClasses>, 32>;

// Preference order for ties: more cards held first, then lower mask.
const std::array<unsigned, 32>& mask_order() {
  static const auto kOrder = [] {
    std::array<unsigned, 32> m;
    std::iota(m.begin(), m.end(), 0u);
    std::stable_sort(m.begin(), m.end(), [](unsigned a, unsigned b) { return std::popcount(a) > std::popcount(b); });
    return m;
  }();
  return kOrder;
}

struct Choice {
  unsigned mask = 0;
  bool tie = false;
  std::array<i128, 32> n{};  // scaled pay sums
};

Choice choose_hold(const HoldCounts& counts, const IntegerPays& ip) {
  Choice ch;
  for (unsigned m = 0; m < 32; ++m) {
    i128 s = 0;
    for (int c = 0; c < kPayClasses; ++c) s += static_cast<i128>(counts[m][c]) * ip.pay[c];
    ch.n[m] = s;
  }
  auto den = [](unsigned m) { return static_cast<i128>(choose47(5 - std::popcount(m))); };
  bool first = true;
  for (unsigned m : mask_order()) {
    if (first || ch.n[m] * den(ch.mask) > ch.n[ch.mask] * den(m)) ch.mask = m;
    first = false;
  }
  for (unsigned m = 0; m < 32; ++m) {
    if (m != ch.mask && ch.n[m] * den(ch.mask) == ch.n[ch.mask] * den(m)) ch.tie = true;
  }
  return ch;
}

HoldAnalysis make_hold_analysis(std::span<const Card> hand, const HoldCounts& counts, const PayTable& pt) {
  const IntegerPays ip = integer_pays(pt);
  const Choice ch = choose_hold(counts, ip);
  HoldAnalysis a;
  a.hand.assign(hand.begin(), hand.end());
  for (unsigned m = 0; m < 32; ++m) {
    const BigInt den = BigInt(static_cast<unsigned long>(choose47(5 - std::popcount(m)))) * ip.scale;
    a.per_hold.push_back({m, Rational(to_big(ch.n[m]), den)});
  }
  a.best = a.per_hold[ch.mask];
  a.tie = ch.tie;
  return a;
}

}  // namespace

HoldAnalysis analyze_hand(std::span<const Card> hand, const PayTable& pt) {
  if (hand.size() != 5) throw Error(ErrorCode::kInvalidParameters, "need five cards");
  const std::uint64_t used = cards::card_mask(hand);
  std::vector<int> deck;
  for (int c = 0; c < 52; ++c) {
    if (!(used & (std::uint64_t{1} << c))) deck.push_back(c);
  }
  HoldCounts counts{};
  for (unsigned m = 0; m < 32; ++m) {
    std::uint64_t held = 0;
    for (int i = 0; i < 5; ++i) {
      if (m & (1u << i)) held |= std::uint64_t{1} << hand[i].index;
    }
    for_each_combination(47, 5 - std::popcount(m), [&](const std::array<int, 5>& idx, int r) {
      std::uint64_t five = held;
      for (int i = 0; i < r; ++i) five |= std::uint64_t{1} << deck[idx[i]];
      ++counts[m][pay_class_of_mask(five)];
    });
  }
  return make_hold_analysis(hand, counts, pt);
}

struct Analyzer::Impl {
  // tally[k][colex index of a k-subset][class]: five-card hands containing
  // the subset, by pay class.
  std::array<std::vector<std::array<std::uint32_t, kPayClasses>>, 5> tally;
  std::array<std::array<std::uint32_t, 6>, 53> binom{};

  std::uint32_t colex(const int* sorted, int k) const {
    std::uint32_t idx = 0;
    for (int i = 0; i < k; ++i) idx += binom[sorted[i]][i + 1];
    return idx;
  }

  Impl() {
    for (int n = 0; n <= 52; ++n) {
      for (int k = 0; k <= 5; ++k) binom[n][k] = static_cast<std::uint32_t>(choose(n, k));
    }
    for (int k = 0; k < 5; ++k) tally[k].assign(binom[52][k], {});
    std::array<int, 5> h;
    for (h[0] = 0; h[0] < 48; ++h[0]) {
      for (h[1] = h[0] + 1; h[1] < 49; ++h[1]) {
        for (h[2] = h[1] + 1; h[2] < 50; ++h[2]) {
          for (h[3] = h[2] + 1; h[3] < 51; ++h[3]) {
            for (h[4] = h[3] + 1; h[4] < 52; ++h[4]) {
              std::uint64_t mask = 0;
              for (int c : h) mask |= std::uint64_t{1} << c;
              const int cls = pay_class_of_mask(mask);
              for (unsigned m = 0; m < 31; ++m) {
                int sub[5];
                int k = 0;
                for (int i = 0; i < 5; ++i) {
                  if (m & (1u << i)) sub[k++] = h[i];
                }
                ++tally[k][colex(sub, k)][cls];
              }
            }
          }
        }
      }
    }
  }

  // Completion counts for every hold of a hand whose card indices ascend.
  HoldCounts counts(const std::array<int, 5>& h) const {
    HoldCounts f{};
    std::uint64_t mask = 0;
    for (int c : h) mask |= std::uint64_t{1} << c;
    f[31][pay_class_of_mask(mask)] = 1;
    for (unsigned m = 0; m < 31; ++m) {
      int sub[5];
      int k = 0;
      for (int i = 0; i < 5; ++i) {
        if (m & (1u << i)) sub[k++] = h[i];
      }
      const auto& t = tally[k][colex(sub, k)];
      for (int c = 0; c < kPayClasses; ++c) f[m][c] = t[c];
    }
    // Superset inclusion-exclusion: keep only hands avoiding the discards.
    for (int bit = 0; bit < 5; ++bit) {
      for (unsigned m = 0; m < 32; ++m) {
        if (m & (1u << bit)) continue;
        for (int c = 0; c < kPayClasses; ++c) f[m][c] -= f[m | (1u << bit)][c];
      }
    }
    return f;
  }
};

Analyzer::Analyzer() : impl_(std::make_unique<Impl>()) {}
Analyzer::~Analyzer() = default;

HoldAnalysis Analyzer::analyze_hand(std::span<const Card> hand, const PayTable& pt) const {
  if (hand.size() != 5) throw Error(ErrorCode::kInvalidParameters, "need five cards");
  cards::card_mask(hand);
  // Sort the cards but report masks against the caller's order.
  std::array<int, 5> order{0, 1, 2, 3, 4};
  std::sort(order.begin(), order.end(), [&](int a, int b) { return hand[a].index < hand[b].index; });
  std::array<int, 5> sorted;
  for (int i = 0; i < 5; ++i) sorted[i] = hand[order[i]].index;
  const HoldCounts s = impl_->counts(sorted);
  HoldCounts counts{};
  for (unsigned m = 0; m < 32; ++m) {
    unsigned sm = 0;
    for (int i = 0; i < 5; ++i) {
      if (m & (1u << order[i])) sm |= 1u << i;
    }
    counts[m] = s[sm];
  }
  return make_hold_analysis(hand, counts, pt);
}

namespace {

struct Partial {
  std::array<i128, 6> first{};    // by cards held: sum of w * n
  std::array<i128, 6> second{};   // sum of w * (sum counts * pay^2)
  std::array<i128, 6> cond_sq{};  // sum of w * n^2
  std::array<std::array<i128, kPayClasses>, 6> classes{};
  std::map<Rational, std::uint64_t> histogram;
  std::set<Rational> non_garbage;
  std::uint64_t tied_classes = 0;
  std::uint64_t tied_hands = 0;
  std::uint64_t hands = 0;
};

}  // namespace

GameAnalysis Analyzer::analyze(const PayTable& pt, unsigned threads) const {
  const IntegerPays ip = integer_pays(pt);
  const auto& classes = cards::five_card_classes();
  threads = std::max(1u, threads);
  std::vector<Partial> parts(threads);
  auto work = [&](unsigned t) {
    Partial& p = parts[t];
    const std::size_t lo = classes.size() * t / threads;
    const std::size_t hi = classes.size() * (t + 1) / threads;
    for (std::size_t i = lo; i < hi; ++i) {
      const cards::HandClass& hc = classes[i];
      std::array<int, 5> h;
      for (int k = 0; k < 5; ++k) h[k] = hc.cards[k].index;
      const HoldCounts counts = impl_->counts(h);
      const Choice ch = choose_hold(counts, ip);
      const int held = std::popcount(ch.mask);
      const i128 w = hc.weight;
      const i128 n = ch.n[ch.mask];
      i128 sq = 0;
      for (int c = 0; c < kPayClasses; ++c) {
        sq += static_cast<i128>(counts[ch.mask][c]) * ip.pay[c] * ip.pay[c];
        p.classes[held][c] += w * counts[ch.mask][c];
      }
      p.first[held] += w * n;
      p.second[held] += w * sq;
      p.cond_sq[held] += w * n * n;
      const Rational value(to_big(n), BigInt(static_cast<unsigned long>(choose47(5 - held))) * ip.scale);
      p.histogram[value] += hc.weight;
      if (ch.mask != 0) p.non_garbage.insert(value);
      if (ch.tie) {
        ++p.tied_classes;
        p.tied_hands += hc.weight;
      }
      p.hands += hc.weight;
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  GameAnalysis g;
  g.paytable = pt.name;
  g.equivalence_classes = classes.size();
  std::array<i128, 6> first{}, second{}, cond_sq{};
  std::array<std::array<i128, kPayClasses>, 6> cls{};
  std::set<Rational> non_garbage;
  for (const Partial& p : parts) {
    for (int k = 0; k <= 5; ++k) {
      first[k] += p.first[k];
      second[k] += p.second[k];
      cond_sq[k] += p.cond_sq[k];
      for (int c = 0; c < kPayClasses; ++c) cls[k][c] += p.classes[k][c];
    }
    for (const auto& [v, n] : p.histogram) g.value_histogram[v] += n;
    non_garbage.insert(p.non_garbage.begin(), p.non_garbage.end());
    g.tied_classes += p.tied_classes;
    g.tied_hands += p.tied_hands;
    g.hands += p.hands;
  }
  const BigInt hands = binomial(52, 5);
  const BigInt scale = ip.scale;
  for (int k = 0; k <= 5; ++k) {
    const BigInt den(static_cast<unsigned long>(choose47(5 - k)));
    g.expected_return += Rational(to_big(first[k]), den * scale * hands);
    g.second_moment += Rational(to_big(second[k]), den * scale * scale * hands);
    g.conditional_second += Rational(to_big(cond_sq[k]), den * den * scale * scale * hands);
    for (int c = 0; c < kPayClasses; ++c) g.class_probability[c] += Rational(to_big(cls[k][c]), den * hands);
  }
  g.royal_probability = g.class_probability[kRoyalFlush];
  g.distinct_values = g.value_histogram.size();
  g.distinct_non_garbage = non_garbage.size();
  return g;
}

PayoffDistribution GameAnalysis::net_distribution(const PayTable& pt) const {
  std::vector<PayoffAtom> atoms;
  for (int c = 0; c < kPayClasses; ++c) atoms.push_back({pt.returns[c] - Rational(1), class_probability[c]});
  return PayoffDistribution(std::move(atoms), pt.name).merged();
}

Rational multiplay_variance(const GameAnalysis& g, unsigned n, MultiPlayStake stake) {
  if (n == 0) throw Error(ErrorCode::kInvalidParameters, "n must be at least 1");
  const Rational within = g.second_moment - g.conditional_second;  // E[Var(R | H)]
  const Rational between = g.conditional_second - g.expected_return * g.expected_return;  // Var(m(H))
  const Rational nn(static_cast<long long>(n));
  if (stake == MultiPlayStake::kDivided) return within / nn + between;
  return nn * within + nn * nn * between;
}

}  // namespace house_edge::videopoker
