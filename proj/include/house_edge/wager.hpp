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

#ifndef HOUSE_EDGE_WAGER_HPP_
#define HOUSE_EDGE_WAGER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "house_edge/rational.hpp"

namespace house_edge {

struct PayoffAtom {
  Rational payoff;  // net units won (negative = lost)
  Rational probability;

  friend bool operator==(const PayoffAtom&, const PayoffAtom&) = default;
};

// Finite distribution of a gambler's net profit. Probabilities are
// non-negative and sum to exactly one.
class PayoffDistribution {
 public:
  PayoffDistribution(std::vector<PayoffAtom> atoms, std::string label = {});

  const std::vector<PayoffAtom>& atoms() const { return atoms_; }
  const std::string& label() const { return label_; }

  // Same distribution with equal payoffs merged and atoms sorted by payoff.
  PayoffDistribution merged() const;
  // Probability that the payoff is exactly `payoff`.
  Rational probability_of(const Rational& payoff) const;

 private:
  std::vector<PayoffAtom> atoms_;
  std::string label_;
};

Rational expectation(const PayoffDistribution& d);
Rational variance(const PayoffDistribution& d);

// Distribution of X + Y for independent X and Y.
PayoffDistribution convolve(const PayoffDistribution& x, const PayoffDistribution& y);

// A wager with the bet-size bookkeeping needed to state a house advantage.
// Staged wagers (free odds, ante-play) fill in expected_total_bet; wagers
// with a guaranteed minimum return fill in amount_at_risk.
struct WagerProfile {
  std::optional<PayoffDistribution> payoff;
  Rational expected_value;  // E[net payoff]
  Rational initial_bet{1};
  Rational expected_total_bet{1};
  Rational amount_at_risk{1};
  Rational push_probability;

  static WagerProfile from_distribution(PayoffDistribution d, Rational initial_bet, Rational expected_total_bet,
                                        Rational amount_at_risk, Rational push_probability);
  // For wagers whose full outcome distribution is not modelled here and whose
  // expectation is supplied by the caller.
  static WagerProfile from_summary(Rational expected_value, Rational initial_bet, Rational expected_total_bet,
                                   Rational amount_at_risk, Rational push_probability);
};

enum class PushConvention { kInclude, kExclude };
enum class BetBasis { kInitial, kExpectedTotal, kAtRisk };

// Expected loss (positive = house edge) divided by the chosen bet basis.
// Excluding pushes conditions on a non-push resolution first.
Rational house_advantage(const WagerProfile& w, PushConvention pushes, BetBasis basis);

struct Odds {
  BigInt against;
  BigInt in_favor;
  Rational to_one;  // against / in_favor, the fair "X to 1" payoff

  std::string str() const { return against.get_str() + " to " + in_favor.get_str(); }
};

// True odds against an event of probability p, in lowest integer terms.
Odds odds_convert(const Rational& p);

nlohmann::json distribution_json(const PayoffDistribution& d, int digits = 7);
// {ev, var, sd} in exact and decimal forms, plus ha_* entries when a profile
// is supplied.
nlohmann::json statistics_json(const PayoffDistribution& d, int digits = 7);
nlohmann::json house_advantage_json(const WagerProfile& w, int digits = 7);

}  // namespace house_edge

#endif  // HOUSE_EDGE_WAGER_HPP_
