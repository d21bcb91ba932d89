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


#ifndef HOUSE_EDGE_SYSTEMS_HPP_
#define HOUSE_EDGE_SYSTEMS_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "house_edge/rational.hpp"

namespace house_edge::systems {

enum class SystemKind { kMartingale, kFibonacci, kLabouchere, kDalembert };
enum class Outcome { kWin, kLose };
// What happens when the system calls for a bet above the house limit.
enum class LimitPolicy { kForfeit, kCap };

SystemKind parse_kind(std::string_view name);
std::string_view kind_name(SystemKind kind);

struct SystemConfig {
  SystemKind kind = SystemKind::kMartingale;
  Rational unit{1};
  // Labouchere: the initial list. Fibonacci: an optional initial list whose
  // last two entries must be consecutive Fibonacci numbers; it only fixes the
  // starting index.
  std::vector<std::int64_t> initial_list;
  int fibonacci_start = 1;  // index n of the first bet F_n
  std::optional<std::int64_t> house_limit;  // in units
  std::optional<std::int64_t> bankroll;     // in units
  // d'Alembert has no natural end; it stops once profit reaches this many units.
  std::optional<std::int64_t> target;
  LimitPolicy limit_policy = LimitPolicy::kForfeit;
};

// Bets, list entries and profit are integer multiples of `config.unit`.
struct BettingSystem {
  SystemConfig config;
  std::int64_t stake = 1;             // martingale stake or d'Alembert level
  int fib_index = 1;                  // Fibonacci index n
  std::vector<std::int64_t> list;     // Labouchere scoresheet
  std::int64_t profit = 0;
  std::int64_t total_won = 0;
  std::int64_t total_lost = 0;
  std::int64_t coups = 0;
  bool stopped = false;
};

BettingSystem make_system(const SystemConfig& config);

// Bet called for by the system's rule, before any house limit.
std::int64_t rule_bet_units(const BettingSystem& s);
// Bet actually placed, in units. Throws SystemStopped, or LimitExceeded when
// the limit binds under the forfeit policy.
std::int64_t next_bet_units(const BettingSystem& s);
Rational next_bet(const BettingSystem& s);
BettingSystem step(const BettingSystem& s, Outcome outcome);

// n-th Fibonacci number, F_1 = F_2 = 1.
std::int64_t fibonacci(int n);

enum class StopCause { kTarget, kBust, kHorizon, kLimit };
std::string_view stop_cause_name(StopCause cause);

struct SimulationSummary {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::int64_t horizon = 0;
  Rational mean_profit;  // exact sample mean, in money
  double sd_profit = 0;  // sample standard deviation, in money
  double standard_error = 0;
  std::map<StopCause, std::uint64_t> stop_causes;
  std::map<std::int64_t, std::uint64_t> max_bet;  // units -> trials
  double mean_coups = 0;
  // Quantiles of the largest drawdown per trial, i.e. the bankroll needed.
  std::vector<std::pair<double, std::int64_t>> bankroll_quantiles;

  double success_rate() const;
};

// Seeded Monte Carlo. Trials are split into fixed chunks with their own
// seed-derived streams, so the result does not depend on `threads`.
SimulationSummary simulate(const SystemConfig& config, const Rational& p, std::uint64_t trials,
                           std::uint64_t seed, std::int64_t horizon, unsigned threads = 0);

// Martingale from one unit with bankroll 2^k - 1: P(win before k losses).
Rational martingale_success(const Rational& p, int k);

struct RuinProblem {
  Rational p;
  Rational q;
  Rational r;
  int W = 1;
  int L = 1;
};

RuinProblem make_ruin_problem(const Rational& p, const Rational& q, int W, int L);
// P(win W units before losing L), unit even-money bets.
Rational ruin_probability(const RuinProblem& rp);

struct KellyResult {
  Rational fraction;
  std::function<long double(const Rational&)> growth;
};

// Optimal fraction for a bet paying b to 1 won with probability p.
KellyResult kelly(const Rational& p, const Rational& b);
// p ln(1 + b f) + (1 - p) ln(1 - f).
long double kelly_growth(const Rational& p, const Rational& b, const Rational& f);

// Probability that bold play reaches fortune 1 from f0 (dyadic, depth <= 40).
Rational bold_play(const Rational& f0, const Rational& p);

nlohmann::json simulation_json(const SimulationSummary& s, int digits = 7);

}  // namespace house_edge::systems

#endif  // HOUSE_EDGE_SYSTEMS_HPP_
