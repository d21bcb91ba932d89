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


#include "house_edge/systems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <random>
#include <thread>

#include "house_edge/error.hpp"

namespace house_edge::systems {

namespace {

constexpr std::int64_t kMaxStake = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t doubled(std::int64_t x) {
  if (x > kMaxStake) throw Error(ErrorCode::kLimitExceeded, "stake overflow");
  return 2 * x;
}

}  // namespace

SystemKind parse_kind(std::string_view name) {
  if (name == "martingale") return SystemKind::kMartingale;
  if (name == "fibonacci") return SystemKind::kFibonacci;
  if (name == "labouchere") return SystemKind::kLabouchere;
  if (name == "dalembert") return SystemKind::kDalembert;
  throw Error(ErrorCode::kInvalidParameters, "unknown system '" + std::string(name) + "'");
}

std::string_view kind_name(SystemKind kind) {
  switch (kind) {
    case SystemKind::kMartingale: return "martingale";
    case SystemKind::kFibonacci: return "fibonacci";
    case SystemKind::kLabouchere: return "labouchere";
    case SystemKind::kDalembert: return "dalembert";
  }
  return "?";
}

std::int64_t fibonacci(int n) {
  if (n < 1 || n > 90) throw Error(ErrorCode::kInvalidParameters, "Fibonacci index out of range");
  std::int64_t a = 1, b = 1;
  for (int i = 2; i < n; ++i) {
    const std::int64_t c = a + b;
    a = b;
    b = c;
  }
  return n <= 2 ? 1 : b;
}

BettingSystem make_system(const SystemConfig& config) {
  if (config.unit.sign() <= 0) throw Error(ErrorCode::kInvalidParameters, "unit must be positive");
  if (config.house_limit && *config.house_limit < 1) throw Error(ErrorCode::kInvalidParameters, "house limit below one unit");
  BettingSystem s;
  s.config = config;
  switch (config.kind) {
    case SystemKind::kMartingale:
    case SystemKind::kDalembert:
      s.stake = 1;
      break;
    case SystemKind::kFibonacci: {
      s.fib_index = config.fibonacci_start;
      const auto& l = config.initial_list;
      if (l.size() == 1 && l[0] == 1) {
        s.fib_index = 1;
      } else if (l.size() >= 2) {
        // Next bet is the sum of the last two entries, which must be F_{n-2}, F_{n-1}.
        int n = 0;
        for (int k = 3; k <= 90; ++k) {
          if (fibonacci(k - 2) == l[l.size() - 2] && fibonacci(k - 1) == l.back()) {
            n = k;
            break;
          }
        }
        if (n == 0) throw Error(ErrorCode::kInvalidParameters, "Fibonacci list must end in consecutive Fibonacci numbers");
        s.fib_index = n;
      }
      fibonacci(s.fib_index);
      break;
    }
    case SystemKind::kLabouchere:
      if (config.initial_list.empty()) throw Error(ErrorCode::kInvalidParameters, "Labouchere needs a non-empty list");
      for (auto x : config.initial_list) {
        if (x < 1) throw Error(ErrorCode::kInvalidParameters, "Labouchere entries must be positive");
      }
      s.list = config.initial_list;
      break;
  }
  return s;
}

std::int64_t rule_bet_units(const BettingSystem& s) {
  if (s.stopped) throw Error(ErrorCode::kSystemStopped, "system has stopped");
  switch (s.config.kind) {
    case SystemKind::kMartingale:
    case SystemKind::kDalembert:
      return s.stake;
    case SystemKind::kFibonacci:
      return fibonacci(s.fib_index);
    case SystemKind::kLabouchere:
      return s.list.size() == 1 ? s.list.front() : s.list.front() + s.list.back();
  }
  return 0;
}

std::int64_t next_bet_units(const BettingSystem& s) {
  const std::int64_t bet = rule_bet_units(s);
  if (s.config.house_limit && bet > *s.config.house_limit) {
    if (s.config.limit_policy == LimitPolicy::kCap) return *s.config.house_limit;
    throw Error(ErrorCode::kLimitExceeded,
                "bet of " + std::to_string(bet) + " units exceeds the limit of " + std::to_string(*s.config.house_limit));
  }
  return bet;
}

Rational next_bet(const BettingSystem& s) { return s.config.unit * Rational(static_cast<long long>(next_bet_units(s))); }

BettingSystem step(const BettingSystem& s, Outcome outcome) {
  const std::int64_t bet = next_bet_units(s);
  BettingSystem t = s;
  ++t.coups;
  const bool win = outcome == Outcome::kWin;
  if (win) {
    t.profit += bet;
    t.total_won += bet;
  } else {
    t.profit -= bet;
    t.total_lost += bet;
  }
  switch (s.config.kind) {
    case SystemKind::kMartingale:
      if (win) {
        t.stake = 1;
        t.stopped = true;  // the series is complete
      } else {
        t.stake = doubled(bet);
      }
      break;
    case SystemKind::kDalembert:
      t.stake = win ? std::max<std::int64_t>(1, s.stake - 1) : s.stake + 1;
      if (s.config.target && t.profit >= *s.config.target) t.stopped = true;
      break;
    case SystemKind::kFibonacci:
      if (win) {
        if (s.fib_index <= 2) {
          t.stopped = true;
        } else {
          t.fib_index = s.fib_index - 2;
        }
      } else {
        t.fib_index = s.fib_index + 1;
        fibonacci(t.fib_index);
      }
      break;
    case SystemKind::kLabouchere:
      if (win) {
        t.list.erase(t.list.begin());
        if (!t.list.empty()) t.list.pop_back();
        if (t.list.empty()) t.stopped = true;
      } else {
        t.list.push_back(bet);
      }
      break;
  }
  return t;
}

std::string_view stop_cause_name(StopCause cause) {
  switch (cause) {
    case StopCause::kTarget: return "target";
    case StopCause::kBust: return "bust";
    case StopCause::kHorizon: return "horizon";
    case StopCause::kLimit: return "limit";
  }
  return "?";
}

double SimulationSummary::success_rate() const {
  auto it = stop_causes.find(StopCause::kTarget);
  return trials == 0 || it == stop_causes.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(trials);
}

namespace {

constexpr std::uint64_t kChunk = 4096;

struct TrialResult {
  std::int64_t profit;
  std::int64_t max_bet;
  std::int64_t drawdown;
  std::int64_t coups;
  StopCause cause;
};

struct ChunkTotals {
  __int128 profit_sum = 0;
  long double profit_sq = 0;
  std::int64_t coups = 0;
  std::map<StopCause, std::uint64_t> causes;
  std::map<std::int64_t, std::uint64_t> max_bet;
};

// Bankroll and limit checks are done here so that the public step() stays a
// pure function of the rule.
TrialResult run_trial(const BettingSystem& start, std::uint64_t num, std::uint64_t den, std::int64_t horizon,
                      std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> draw(0, den - 1);
  BettingSystem s = start;
  TrialResult r{0, 0, 0, 0, StopCause::kHorizon};
  const auto& cfg = s.config;
  while (true) {
    if (s.stopped) {
      r.cause = StopCause::kTarget;
      break;
    }
    if (s.coups >= horizon) {
      r.cause = StopCause::kHorizon;
      break;
    }
    std::int64_t bet = 0;
    try {
      bet = next_bet_units(s);
    } catch (const Error&) {
      r.cause = StopCause::kLimit;
      break;
    }
    if (cfg.bankroll && bet > *cfg.bankroll + s.profit) {
      r.cause = StopCause::kBust;
      break;
    }
    r.max_bet = std::max(r.max_bet, bet);
    try {
      s = step(s, draw(rng) < num ? Outcome::kWin : Outcome::kLose);
    } catch (const Error&) {
      r.cause = StopCause::kLimit;
      break;
    }
    r.drawdown = std::max(r.drawdown, -s.profit);
  }
  r.profit = s.profit;
  r.coups = s.coups;
  return r;
}

}  // namespace

SimulationSummary simulate(const SystemConfig& config, const Rational& p, std::uint64_t trials, std::uint64_t seed,
                           std::int64_t horizon, unsigned threads) {
  if (p.sign() <= 0 || p >= Rational(1)) throw Error(ErrorCode::kInvalidParameters, "p must lie in (0, 1)");
  if (trials == 0 || horizon <= 0) throw Error(ErrorCode::kInvalidParameters, "trials and horizon must be positive");
  if (!p.denominator().fits_ulong_p()) throw Error(ErrorCode::kInvalidParameters, "p denominator too large");
  const std::uint64_t num = p.numerator().get_ui();
  const std::uint64_t den = p.denominator().get_ui();
  const BettingSystem start = make_system(config);

  const std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));

  std::vector<ChunkTotals> totals(chunks);
  std::vector<std::int64_t> drawdowns(trials);
  auto work = [&](unsigned t) {
    for (std::uint64_t c = t; c < chunks; c += threads) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
      std::mt19937_64 rng(seq);
      ChunkTotals& ct = totals[c];
      const std::uint64_t end = std::min(trials, (c + 1) * kChunk);
      for (std::uint64_t i = c * kChunk; i < end; ++i) {
        const TrialResult r = run_trial(start, num, den, horizon, rng);
        ct.profit_sum += r.profit;
        ct.profit_sq += static_cast<long double>(r.profit) * static_cast<long double>(r.profit);
        ct.coups += r.coups;
        ++ct.causes[r.cause];
        ++ct.max_bet[r.max_bet];
        drawdowns[i] = r.drawdown;
      }
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  SimulationSummary out;
  out.trials = trials;
  out.seed = seed;
  out.horizon = horizon;
  __int128 sum = 0;
  long double sq = 0;
  std::int64_t coups = 0;
  for (const auto& ct : totals) {
    sum += ct.profit_sum;
    sq += ct.profit_sq;
    coups += ct.coups;
    for (const auto& [k, v] : ct.causes) out.stop_causes[k] += v;
    for (const auto& [k, v] : ct.max_bet) out.max_bet[k] += v;
  }
  const bool neg = sum < 0;
  unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(sum) : static_cast<unsigned __int128>(sum);
  BigInt big(static_cast<unsigned long>(mag >> 64));
  big <<= 64;
  big += BigInt(static_cast<unsigned long>(mag & 0xFFFFFFFFFFFFFFFFull));
  if (neg) big = -big;
  const Rational mean_units = Rational(big, BigInt(static_cast<unsigned long>(trials)));
  out.mean_profit = mean_units * config.unit;
  const long double n = static_cast<long double>(trials);
  const long double m = mean_units.to_double();
  const long double var = trials > 1 ? std::max<long double>(0, (sq - n * m * m) / (n - 1)) : 0;
  const double unit = config.unit.to_double();
  out.sd_profit = static_cast<double>(std::sqrt(var)) * unit;
  out.standard_error = out.sd_profit / std::sqrt(static_cast<double>(trials));
  out.mean_coups = static_cast<double>(coups) / static_cast<double>(trials);
  std::sort(drawdowns.begin(), drawdowns.end());
  for (double q : {0.5, 0.9, 0.99, 0.999}) {
    const auto idx = static_cast<std::size_t>(std::ceil(q * static_cast<double>(trials))) - 1;
    out.bankroll_quantiles.emplace_back(q, drawdowns[std::min<std::size_t>(idx, trials - 1)]);
  }
  return out;
}

Rational martingale_success(const Rational& p, int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidParameters, "k must be non-negative");
  return Rational(1) - (Rational(1) - p).pow(static_cast<unsigned>(k));
}

RuinProblem make_ruin_problem(const Rational& p, const Rational& q, int W, int L) {
  if (p.sign() <= 0 || q.sign() <= 0 || p + q > Rational(1)) {
    throw Error(ErrorCode::kInvalidParameters, "need p, q > 0 and p + q <= 1");
  }
  if (W < 1 || L < 1) throw Error(ErrorCode::kInvalidParameters, "W and L must be positive");
  return RuinProblem{p, q, Rational(1) - p - q, W, L};
}

Rational ruin_probability(const RuinProblem& rp) {
  if (rp.p.sign() <= 0 || rp.q.sign() <= 0 || rp.r.sign() < 0 || rp.p + rp.q + rp.r != Rational(1)) {
    throw Error(ErrorCode::kInvalidParameters, "invalid ruin problem");
  }
  if (rp.p == rp.q) return Rational(rp.L, rp.L + rp.W);
  const Rational ratio = rp.q / rp.p;
  const Rational one(1);
  return (one - ratio.pow(static_cast<unsigned>(rp.L))) / (one - ratio.pow(static_cast<unsigned>(rp.L + rp.W)));
}

long double kelly_growth(const Rational& p, const Rational& b, const Rational& f) {
  const long double pp = p.to_double();
  const long double bf = (b * f).to_double();
  const long double ff = f.to_double();
  return pp * std::log1p(bf) + (1 - pp) * std::log1p(-ff);
}

KellyResult kelly(const Rational& p, const Rational& b) {
  if (p.sign() <= 0 || p >= Rational(1) || b.sign() <= 0) throw Error(ErrorCode::kInvalidParameters, "need 0 < p < 1, b > 0");
  Rational f = (b * p - (Rational(1) - p)) / b;
  if (f.sign() < 0) f = Rational(0);
  return KellyResult{f, [p, b](const Rational& x) { return kelly_growth(p, b, x); }};
}

Rational bold_play(const Rational& f0, const Rational& p) {
  if (p.sign() <= 0 || p >= Rational(1)) throw Error(ErrorCode::kInvalidParameters, "p must lie in (0, 1)");
  if (f0.sign() <= 0 || f0 >= Rational(1)) throw Error(ErrorCode::kInvalidParameters, "fortune must lie in (0, 1)");
  const BigInt den = f0.denominator();
  const auto depth = mpz_scan1(den.get_mpz_t(), 0);
  BigInt pow2(1);
  pow2 <<= depth;
  if (pow2 != den || depth > 40) throw Error(ErrorCode::kNonDyadicInput, f0.str() + " is not dyadic of depth <= 40");
  // Unroll Q(f) = p Q(2f) or p + q Q(2f - 1) into Q(f0) = a + c Q(f_k).
  const Rational q = Rational(1) - p;
  Rational a, c(1), f = f0;
  const Rational half(1, 2);
  while (f.sign() > 0 && f < Rational(1)) {
    if (f <= half) {
      c *= p;
      f = f * Rational(2);
    } else {
      a += c * p;
      c *= q;
      f = f * Rational(2) - Rational(1);
    }
  }
  return f.sign() == 0 ? a : a + c;
}

namespace {

std::string fixed(double x, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

}  // namespace

nlohmann::json simulation_json(const SimulationSummary& s, int digits) {
  nlohmann::json j;
  j["trials"] = s.trials;
  j["seed"] = s.seed;
  j["horizon"] = s.horizon;
  j["mean_profit"] = {{"exact", s.mean_profit.str()}, {"decimal", s.mean_profit.decimal(digits)}};
  j["sd_profit"] = fixed(s.sd_profit, digits);
  j["standard_error"] = fixed(s.standard_error, digits);
  const double m = s.mean_profit.to_double();
  j["band_95"] = fixed(m - 1.96 * s.standard_error, digits) + " to " + fixed(m + 1.96 * s.standard_error, digits);
  j["mean_coups"] = fixed(s.mean_coups, digits);
  nlohmann::json causes = nlohmann::json::object();
  for (const auto& [k, v] : s.stop_causes) causes[std::string(stop_cause_name(k))] = v;
  j["stop_causes"] = causes;
  nlohmann::json mb = nlohmann::json::array();
  for (const auto& [k, v] : s.max_bet) mb.push_back({k, v});
  j["max_bet"] = mb;
  nlohmann::json bq = nlohmann::json::array();
  for (const auto& [q, v] : s.bankroll_quantiles) bq.push_back({q, v});
  j["bankroll_quantiles"] = bq;
  return j;
}

}  // namespace house_edge::systems
