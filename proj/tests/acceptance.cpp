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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "house_edge/baccarat.hpp"
#include "house_edge/cards.hpp"
#include "house_edge/classics.hpp"
#include "house_edge/coherence.hpp"
#include "house_edge/craps.hpp"
#include "house_edge/error.hpp"
#include "house_edge/gametheory.hpp"
#include "house_edge/holdem.hpp"
#include "house_edge/lotteries.hpp"
#include "house_edge/matrix.hpp"
#include "house_edge/roulette.hpp"
#include "house_edge/snackjack.hpp"
#include "house_edge/systems.hpp"
#include "house_edge/videopoker.hpp"
#include "house_edge/wager.hpp"

using namespace house_edge;

namespace {

unsigned g_threads = 1;

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks";
    for (const auto& n : notes_) os << "; " << n;
    for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) os << "; FAILED " << failures_[i];
    if (failures_.size() > 5) os << "; ... " << failures_.size() - 5 << " more";
    return os.str();
  }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string fmt(double x, int digits) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << x;
  return os.str();
}

// ------------------------------------------------------------------ 1

void keno(Checker& c) {
  c.expect(lotteries::keno_catch(10, 6) == Rational(24869385, 2166436987), "keno (10,6)");
  for (int n = 1; n <= 15; ++n) {
    for (int k = 0; k <= n; ++k) {
      const lotteries::KenoTicket t{n, k, 80, 20};
      c.expect(lotteries::keno_catch_player_form(t) == lotteries::keno_catch_drawn_form(t),
               "forms differ at " + std::to_string(n) + "/" + std::to_string(k));
    }
  }
}

// ------------------------------------------------------------------ 2

void lotto(Checker& c) {
  const std::map<lotteries::LottoCategory, std::string> printed = {
      {lotteries::LottoCategory::k6of6, "13983816.0"},     {lotteries::LottoCategory::k5of6Bonus, "2330636.0"},
      {lotteries::LottoCategory::k5of6NoBonus, "55491.3"}, {lotteries::LottoCategory::k4of6, "1032.4"},
      {lotteries::LottoCategory::k3of6, "56.7"},           {lotteries::LottoCategory::k2of6Bonus, "81.2"}};
  const auto cats = lotteries::lotto_649_categories();
  c.expect(cats.size() == 6, "six categories");
  for (const auto& [cat, text] : printed) {
    const std::string got = cats.at(cat).reciprocal().decimal(1);
    c.expect(got == text, lotteries::lotto_category_name(cat) + " 1 in " + got);
  }
}

// ------------------------------------------------------------------ 3

std::vector<std::set<int>> layout_bets() {
  std::vector<std::set<int>> out;
  const int dz = roulette::kDoubleZero;
  for (int p = 0; p <= dz; ++p) out.push_back({p});
  for (int n = 1; n <= 36; ++n) {
    if (n % 3 != 0) out.push_back({n, n + 1});
    if (n <= 33) out.push_back({n, n + 3});
  }
  out.push_back({0, dz});
  out.push_back({0, 1});
  out.push_back({0, 2});
  out.push_back({dz, 2});
  out.push_back({dz, 3});
  out.push_back({0, 1, 2});
  out.push_back({0, dz, 2});
  out.push_back({dz, 2, 3});
  for (int r = 0; r < 12; ++r) out.push_back({3 * r + 1, 3 * r + 2, 3 * r + 3});
  for (int n = 1; n <= 32; ++n) {
    if (n % 3 != 0) out.push_back({n, n + 1, n + 3, n + 4});
  }
  for (int r = 0; r < 11; ++r) {
    std::set<int> s;
    for (int i = 1; i <= 6; ++i) s.insert(3 * r + i);
    out.push_back(s);
  }
  for (int d = 0; d < 3; ++d) {
    std::set<int> dozen, column, two_dozens, two_columns;
    for (int i = 1; i <= 36; ++i) {
      if ((i - 1) / 12 == d) dozen.insert(i);
      if (i % 3 == (d + 1) % 3) column.insert(i);
      if ((i - 1) / 12 != d) two_dozens.insert(i);
      if (i % 3 != (d + 1) % 3) two_columns.insert(i);
    }
    out.push_back(dozen);
    out.push_back(column);
    out.push_back(two_dozens);
    out.push_back(two_columns);
  }
  for (const char* name : {"red", "black", "odd", "even", "low", "high"}) out.push_back(roulette::named_bet(name).numbers);
  return out;
}

void roulette_check(Checker& c) {
  const auto bets = layout_bets();
  for (const auto& s : bets) {
    const auto b = roulette::make_bet(s);
    c.expect(expectation(roulette::bet_distribution(b)) == Rational(-1, 19), "EV of a " + std::to_string(s.size()) + "-number bet");
    // A bet of m units on m numbers is m single-number bets.
    const auto big = roulette::make_bet(s, Rational(static_cast<long long>(s.size())));
    const auto parts = roulette::decompose(big);
    for (int p = 0; p <= roulette::kDoubleZero; ++p) {
      Rational sum;
      for (const auto& part : parts) sum += roulette::spin_payoff(part, p);
      c.expect(sum == roulette::spin_payoff(big, p), "decomposition on pocket " + std::to_string(p));
    }
  }
  c.note(std::to_string(bets.size()) + " layout bets");
  const auto five = roulette::make_bet({0, roulette::kDoubleZero, 1, 2, 3}, Rational(5));
  c.expect(expectation(roulette::bet_distribution(roulette::make_bet(five.numbers))) == Rational(-3, 38), "five-number bet");
  const auto parts = roulette::decompose(five);
  for (int p = 0; p <= roulette::kDoubleZero; ++p) {
    Rational sum;
    for (const auto& part : parts) sum += roulette::spin_payoff(part, p);
    c.expect(sum == roulette::fair_spin_payoff(five, p), "five-number decomposition on pocket " + std::to_string(p));
  }
  const auto cuban = roulette::portfolio_distribution({roulette::named_bet("col3"), roulette::named_bet("black")});
  c.expect(expectation(cuban) == Rational(-2, 19), "Cuban system");
}

// ------------------------------------------------------------------ 4

// Mean number of rolls to resolve a pass-line bet, from the absorbing chain
// {come-out, point 4/10, point 5/9, point 6/8}.
Rational duration_oracle() {
  const Rational seven = craps::dice(7);
  RationalMatrix a(4, 4);
  std::vector<Rational> ones(4, Rational(1));
  a(0, 0) = Rational(1);
  const int reps[3] = {4, 5, 6};
  for (int i = 0; i < 3; ++i) {
    const auto u = static_cast<std::size_t>(i + 1);
    const Rational stay = Rational(1) - craps::dice(reps[i]) - seven;
    a(0, u) = -Rational(2) * craps::dice(reps[i]);
    a(u, u) = Rational(1) - stay;
  }
  return (*a.solve(ones))[0];
}

void craps_check(Checker& c) {
  c.expect(expectation(craps::pass_line()) == Rational(-7, 495), "pass line");
  for (int m : {1, 2, 3, 5, 10, 100}) {
    const auto r = craps::pass_with_odds(Rational(m));
    const Rational want = Rational(7, 495) / (Rational(1) + Rational(2, 3) * Rational(m));
    c.expect(r.ha == want, "odds m=" + std::to_string(m));
    c.expect(-r.ev / r.expected_total_bet == want, "odds ratio m=" + std::to_string(m));
  }
  const auto dp = craps::dont_pass();
  c.expect(house_advantage(dp, PushConvention::kInclude, BetBasis::kInitial) == Rational(27, 1980), "don't pass incl.");
  c.expect(house_advantage(dp, PushConvention::kExclude, BetBasis::kInitial) == Rational(27, 1925), "don't pass excl.");
  const auto len = craps::hand_length(154);
  const double one_in = len.survival.reciprocal().to_double();
  c.expect(std::abs(one_in / 5.59e9 - 1) < 0.01, "P(length >= 154) 1 in " + fmt(one_in, 1));
  c.note("P(length >= 154) = 1/" + fmt(one_in, 1));
  const Rational d = craps::decision_duration_mean();
  c.expect(d == Rational(557, 165), "duration mean");
  c.expect(d == duration_oracle(), "duration vs chain");
}

// ------------------------------------------------------------------ 5

void baccarat_check(Checker& c) {
  using baccarat::Action;
  c.expect(baccarat::banker_choice_ev(3, 8, Action::kDraw) == Rational(86, 1365), "(3,8) draw");
  c.expect(baccarat::banker_choice_ev(3, 8, Action::kStand) == Rational(91, 1365), "(3,8) stand");
  // The printed table, rows banker total 0..7, columns player third card 0..9 then none.
  static const char* const kTable[8] = {"DDDDDDDDDDD", "DDDDDDDDDDD", "DDDDDDDDDDD", "DDDDDDDDSDD",
                                        "SSDDDDDDSSD", "SSSSDDDDSSD", "SSSSSSDDSSS", "SSSSSSSSSSS"};
  int cells = 0;
  for (int x = 0; x <= 7; ++x) {
    for (int col = 0; col <= 10; ++col) {
      const int y = col == 10 ? baccarat::kNoCard : col;
      const Action want = kTable[x][col] == 'D' ? Action::kDraw : Action::kStand;
      c.expect(baccarat::banker_action_compact(x, y) == want, "cell " + std::to_string(x) + "," + std::to_string(y));
      ++cells;
    }
  }
  c.note(std::to_string(cells) + " cells");
  const auto g = std::get<gametheory::MatrixGame>(baccarat::build_chemin_game(Rational(0)));
  const auto s = gametheory::solve_zero_sum(g);
  c.expect(s.row_mix.size() == 2 && s.row_mix[0] == Rational(9, 11) && s.row_mix[1] == Rational(2, 11), "player mix");
  std::vector<Rational> support;
  for (const auto& q : s.col_mix) {
    if (!q.is_zero()) support.push_back(q);
  }
  std::sort(support.begin(), support.end());
  c.expect(support == std::vector<Rational>{Rational(859, 2288), Rational(1429, 2288)}, "banker mix");
  c.expect(gametheory::verify_minimax(g, s), "minimax verification");
}

// ------------------------------------------------------------------ 6

void snackjack_check(Checker& c) {
  snackjack::Engine e;
  const auto st = snackjack::initial_state(snackjack::parse_hand("3,3"), 1);
  c.expect(e.action_ev(st, snackjack::Action::kStand) == Rational(-2, 9), "{3,3} vs A stand");
  std::set<std::vector<int>> seqs;
  for (int up = 1; up <= 3; ++up) {
    auto deck = snackjack::full_deck();
    --deck[up];
    for (const auto& s : snackjack::dealer_sequences(up, deck)) seqs.insert(s.cards);
  }
  c.expect(seqs.size() == 17, "dealer sequences " + std::to_string(seqs.size()));
  const auto table = e.basic_strategy();
  c.expect(table.points.size() == 32, "decision points " + std::to_string(table.points.size()));
}

// ------------------------------------------------------------------ 7

void videopoker_check(Checker& c) {
  const videopoker::Analyzer analyzer;
  const std::map<std::string, double> want = {
      {"9-6", 0.995439}, {"9-6-940", 0.999030}, {"8-5-2500", 1.023886}};
  for (const auto& [name, value] : want) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto g = analyzer.analyze(videopoker::preset_paytable(name), g_threads);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double r = g.expected_return.to_double();
    c.expect(std::abs(r - value) <= 5e-7, name + " return " + fmt(r, 7));
    c.note(name + " " + g.expected_return.decimal(7) + " in " + fmt(secs, 1) + " s");
    c.expect(g.equivalence_classes == 134459, name + " classes");
    if (name != "9-6") continue;
    const double sd = g.sd().value.to_double();
    c.expect(std::abs(sd - 4.4175) <= 5e-5, "sd " + fmt(sd, 6));
    const double royal = g.royal_probability.reciprocal().to_double();
    c.expect(std::abs(royal - 40390.5) <= 0.5, "royal 1/" + fmt(royal, 2));
    c.expect(g.distinct_values == 1153, "distinct values " + std::to_string(g.distinct_values));
    c.expect(g.distinct_non_garbage == 387, "non-garbage values " + std::to_string(g.distinct_non_garbage));
    c.note("sd " + fmt(sd, 6) + ", royal 1/" + fmt(royal, 2));
  }
}

// ------------------------------------------------------------------ 8

void holdem_check(Checker& c) {
  const std::vector<std::pair<std::string, std::pair<int, std::string>>> table6 = {
      {"AA", {1, "0.704074"}}, {"KK", {2, "0.647914"}},  {"QQ", {3, "0.598503"}},  {"JJ", {4, "0.549389"}},
      {"TT", {5, "0.500236"}}, {"99", {6, "0.441145"}},  {"88", {7, "0.383261"}},  {"77", {9, "0.324720"}},
      {"66", {17, "0.265695"}}, {"55", {27, "0.206498"}}, {"44", {48, "0.140456"}}, {"33", {66, "0.073862"}},
      {"22", {87, "0.006680"}}};
  const auto t0 = std::chrono::steady_clock::now();
  const auto ranked = holdem::rank_all(g_threads);
  const double full = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(ranked.size() == 169, "169 classes");
  c.expect(full <= 7200, "full ranking time");
  std::map<std::string, std::pair<int, Rational>> got;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    got[ranked[i].hand.name()] = {static_cast<int>(i + 1), ranked[i].net_gain};
  }
  for (const auto& [name, row] : table6) {
    const auto& [rank, value] = got[name];
    c.expect(rank == row.first, name + " rank " + std::to_string(rank));
    c.expect(value.decimal(6) == row.second, name + " " + value.decimal(6));
  }
  const auto t1 = std::chrono::steady_clock::now();
  const auto hole = holdem::parse_class("22").representative();
  const auto single = holdem::vs_random(hole, g_threads);
  const double one = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
  c.expect(single.net_gain() == got["22"].second, "22 by direct enumeration");
  c.expect(one <= 600, "single pair time");
  c.expect(holdem::matchup_class_count() == 47008, "matchup classes");
  c.note("ranking " + fmt(full, 1) + " s, 22 alone " + fmt(one, 1) + " s");
}

// ------------------------------------------------------------------ 9

// Uniform over fractions a/d with 0 < a < d <= 60.
Rational random_probability(std::mt19937_64& rng) {
  const long long den = std::uniform_int_distribution<long long>(2, 60)(rng);
  return Rational(std::uniform_int_distribution<long long>(1, den - 1)(rng), den);
}

void coherence_check(Checker& c) {
  std::mt19937_64 rng(20240601);
  int coherent = 0;
  int books = 0;
  for (int i = 0; i < 10000; ++i) {
    const Rational pa = random_probability(rng);
    const Rational pba = random_probability(rng);
    // Half the triples obey the product law by construction.
    const Rational pab = (i % 2 == 0) ? pa * pba : random_probability(rng);
    const coherence::BetSystem s{pa, pab, pba};
    const bool law = pab == pa * pba;
    const auto m = coherence::build_stake_matrix(s);
    const bool singular = m.determinant().is_zero();
    c.expect(singular == law, "det vs product law");
    c.expect(coherence::is_coherent(s).coherent == law, "verdict");
    if (law) {
      ++coherent;
      continue;
    }
    std::array<Rational, 3> w;
    for (auto& x : w) x = Rational(std::uniform_int_distribution<long long>(-20, 20)(rng), 7);
    const auto b = coherence::dutch_book(s, w);
    const auto mb = m * std::vector<Rational>(b.begin(), b.end());
    c.expect(mb == std::vector<Rational>(w.begin(), w.end()), "Mb = w");
    c.expect(coherence::settle(s, b) == w, "settle");
    const auto sure = coherence::dutch_book(s, coherence::Target::kSureWin);
    for (const auto& x : coherence::settle(s, sure)) c.expect(x.sign() > 0, "sure win");
    ++books;
  }
  c.note(std::to_string(coherent) + " coherent, " + std::to_string(books) + " books");
}

// ------------------------------------------------------------------ 10

void house_advantage_check(Checker& c) {
  const Rational n(20358520);
  const auto tcp = WagerProfile::from_summary(Rational(-686689) / n, Rational(1), Rational(34084400) / n, Rational(1),
                                              Rational(0));
  const auto initial = house_advantage(tcp, PushConvention::kInclude, BetBasis::kInitial);
  const auto total = house_advantage(tcp, PushConvention::kInclude, BetBasis::kExpectedTotal);
  c.expect(initial == Rational(686689, 20358520) && initial.decimal(7) == "0.0337298", "initial " + initial.decimal(7));
  c.expect(total == Rational(686689, 34084400) && total.decimal(7) == "0.0201467", "total " + total.decimal(7));
  // $5 ticket that never pays back less than $1: $4 is at risk.
  const PayoffDistribution ticket({{Rational(-4), Rational(3, 4)}, {Rational(-2), Rational(1, 8)}, {Rational(15), Rational(1, 8)}});
  const auto w = WagerProfile::from_distribution(ticket, Rational(5), Rational(5), Rational(4), Rational(0));
  c.expect(house_advantage(w, PushConvention::kInclude, BetBasis::kAtRisk) == -expectation(ticket) / Rational(4), "at risk");
  c.expect(house_advantage(w, PushConvention::kInclude, BetBasis::kInitial) == -expectation(ticket) / Rational(5), "initial");
}

// ------------------------------------------------------------------ 11

// P(win) from every starting fortune of the chain on {0..n}.
std::vector<Rational> ruin_chain(const Rational& p, const Rational& q, int n) {
  const auto sz = static_cast<std::size_t>(n + 1);
  RationalMatrix a(sz, sz);
  std::vector<Rational> b(sz);
  const Rational r = Rational(1) - p - q;
  a(0, 0) = Rational(1);
  a(sz - 1, sz - 1) = Rational(1);
  b[sz - 1] = Rational(1);
  for (std::size_t i = 1; i + 1 < sz; ++i) {
    a(i, i) = Rational(1) - r;
    a(i, i + 1) = -p;
    a(i, i - 1) = -q;
  }
  return *a.solve(b);
}

void systems_check(Checker& c) {
  using namespace systems;
  const std::uint64_t trials = 1000000;
  for (auto kind : {SystemKind::kMartingale, SystemKind::kFibonacci, SystemKind::kLabouchere, SystemKind::kDalembert}) {
    SystemConfig cfg;
    cfg.kind = kind;
    if (kind == SystemKind::kLabouchere) cfg.initial_list = {1, 2, 3};
    if (kind == SystemKind::kDalembert) cfg.target = 10;
    cfg.bankroll = 1023;
    const auto s = simulate(cfg, Rational(1, 2), trials, 1000 + static_cast<int>(kind), 1000, g_threads);
    const double m = s.mean_profit.to_double();
    c.expect(std::abs(m) <= 4 * s.standard_error, std::string(kind_name(kind)) + " mean " + fmt(m, 4));
    c.note(std::string(kind_name(kind)) + " " + fmt(m, 4) + " (se " + fmt(s.standard_error, 4) + ")");
  }
  const std::vector<std::pair<Rational, Rational>> grid = {
      {Rational(1, 2), Rational(1, 2)},       {Rational(18, 38), Rational(20, 38)}, {Rational(244, 495), Rational(251, 495)},
      {Rational(1, 3), Rational(2, 3)},       {Rational(3, 5), Rational(2, 5)},     {Rational(2, 5), Rational(1, 2)},
      {Rational(9, 19), Rational(9, 19)}};
  int problems = 0;
  for (const auto& [p, q] : grid) {
    for (int n = 2; n <= 30; ++n) {
      const auto chain = ruin_chain(p, q, n);
      for (int L = 1; L < n; ++L) {
        const Rational f = ruin_probability(make_ruin_problem(p, q, n - L, L));
        c.expect(f == chain[static_cast<std::size_t>(L)], "ruin p=" + p.str() + " L=" + std::to_string(L));
        ++problems;
      }
    }
  }
  c.note(std::to_string(problems) + " ruin problems");
  for (int k = 1; k <= 12; ++k) {
    for (long long a = 1; a < (1LL << k); a += 2) {
      const Rational f(a, 1LL << k);
      c.expect(bold_play(f, Rational(1, 2)) == f, "bold play " + f.str());
    }
  }
  for (int k : {3, 6, 10}) {
    SystemConfig cfg;
    cfg.bankroll = (1 << k) - 1;
    const Rational p(18, 38);
    const auto s = simulate(cfg, p, trials, 77 + k, 100, g_threads);
    const double q = martingale_success(p, k).to_double();
    c.expect(martingale_success(p, k) == Rational(1) - (Rational(1) - p).pow(static_cast<unsigned>(k)), "closed form");
    const double se = std::sqrt(q * (1 - q) / static_cast<double>(trials));
    c.expect(std::abs(s.success_rate() - q) <= 4 * se, "martingale k=" + std::to_string(k) + " " + fmt(s.success_rate(), 6));
  }
}

// ------------------------------------------------------------------ 12

void classics_check(Checker& c) {
  c.expect(mere_single_six() == Rational(671, 1296), "single six");
  c.expect(mere_double_six() == Rational(1) - Rational(35, 36).pow(24), "double six");
  // Monty Hall: car, first pick and host's choice, all enumerated.
  Rational stay, swap;
  for (int car = 0; car < 3; ++car) {
    for (int pick = 0; pick < 3; ++pick) {
      std::vector<int> opens;
      for (int d = 0; d < 3; ++d) {
        if (d != car && d != pick) opens.push_back(d);
      }
      for (int open : opens) {
        const Rational w = Rational(1, 9) / Rational(static_cast<long long>(opens.size()));
        const int other = 3 - pick - open;
        if (pick == car) stay += w;
        if (other == car) swap += w;
      }
    }
  }
  c.expect(swap == Rational(2, 3) && stay == Rational(1, 3), "enumeration");
  c.expect(monty_hall(true) == swap && monty_hall(false) == stay, "monty hall");
  // Problem of points: play out all 2^4 sequences of the remaining games.
  int a_wins = 0;
  for (int s = 0; s < 16; ++s) {
    int a = 0, b = 0;
    for (int g = 0; g < 4 && a < 2 && b < 3; ++g) ((s >> g) & 1 ? a : b)++;
    a_wins += a == 2;
  }
  c.expect(problem_of_points(2, 3, Rational(1, 2)) == Rational(a_wins, 16), "points vs brute force");
  c.expect(Rational(a_wins, 16) == Rational(11, 16), "11/16");
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<void(Checker&)> run;
};

}  // namespace

// Optional arguments select criteria by number; the default runs all twelve.
int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  g_threads = std::max(1u, std::thread::hardware_concurrency());
  const double vp_budget = g_threads >= 8 ? 300 : 1800;
  const std::vector<Criterion> criteria = {
      {1, "keno identity", 1, keno},
      {2, "lotto 6/49", 1, lotto},
      {3, "roulette", 1, roulette_check},
      {4, "craps", 10, craps_check},
      {5, "baccarat and chemin de fer", 30, baccarat_check},
      {6, "snackjack", 5, snackjack_check},
      {7, "video poker", vp_budget, videopoker_check},
      {8, "hold'em", 7200 + 600, holdem_check},
      {9, "coherence", 5, coherence_check},
      {10, "house advantage", 1, house_advantage_check},
      {11, "betting systems", 120, systems_check},
      {12, "classics", 1, classics_check},
  };
  std::cout << "threads: " << g_threads << std::endl;
  int failed = 0;
  for (const auto& cr : criteria) {
    if (!only.empty() && !only.count(cr.id)) continue;
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(secs <= cr.budget_seconds, "time budget " + fmt(cr.budget_seconds, 0) + " s");
    const bool ok = c.ok();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << cr.id << " (" << cr.name << ") " << fmt(secs, 2) << " s: "
              << c.summary() << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
