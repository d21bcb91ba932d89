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

#include "house_edge/wager.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "house_edge/error.hpp"

namespace house_edge {

PayoffDistribution::PayoffDistribution(std::vector<PayoffAtom> atoms, std::string label)
    : atoms_(std::move(atoms)), label_(std::move(label)) {
  if (atoms_.empty()) throw Error(ErrorCode::kInvalidProbability, "empty payoff distribution");
  Rational total;
  for (const auto& a : atoms_) {
    if (a.probability.sign() < 0) throw Error(ErrorCode::kInvalidProbability, "negative probability");
    total += a.probability;
  }
  if (total != Rational(1)) {
    throw Error(ErrorCode::kInvalidProbability, "probabilities sum to " + total.str() + ", not 1");
  }
}

PayoffDistribution PayoffDistribution::merged() const {
  std::map<Rational, Rational> by_payoff;
  for (const auto& a : atoms_) by_payoff[a.payoff] += a.probability;
  std::vector<PayoffAtom> out;
  out.reserve(by_payoff.size());
  for (auto& [payoff, prob] : by_payoff) out.push_back({payoff, prob});
  return PayoffDistribution(std::move(out), label_);
}

Rational PayoffDistribution::probability_of(const Rational& payoff) const {
  Rational p;
  for (const auto& a : atoms_) {
    if (a.payoff == payoff) p += a.probability;
  }
  return p;
}

Rational expectation(const PayoffDistribution& d) {
  Rational ev;
  for (const auto& a : d.atoms()) ev += a.payoff * a.probability;
  return ev;
}

Rational variance(const PayoffDistribution& d) {
  Rational second;
  for (const auto& a : d.atoms()) second += a.payoff * a.payoff * a.probability;
  const Rational ev = expectation(d);
  return second - ev * ev;
}

PayoffDistribution convolve(const PayoffDistribution& x, const PayoffDistribution& y) {
  std::vector<PayoffAtom> atoms;
  atoms.reserve(x.atoms().size() * y.atoms().size());
  for (const auto& a : x.atoms()) {
    for (const auto& b : y.atoms()) atoms.push_back({a.payoff + b.payoff, a.probability * b.probability});
  }
  return PayoffDistribution(std::move(atoms), x.label() + " + " + y.label()).merged();
}

namespace {

void check_profile(const WagerProfile& w) {
  if (w.push_probability.sign() < 0 || w.push_probability > Rational(1)) {
    throw Error(ErrorCode::kInvalidProbability, "push probability outside [0,1]");
  }
  if (w.amount_at_risk.sign() <= 0 || w.amount_at_risk > w.initial_bet || w.initial_bet > w.expected_total_bet) {
    throw Error(ErrorCode::kInvalidParameters, "need 0 < amount_at_risk <= initial_bet <= expected_total_bet");
  }
}

}  // namespace

WagerProfile WagerProfile::from_distribution(PayoffDistribution d, Rational initial_bet, Rational expected_total_bet,
                                             Rational amount_at_risk, Rational push_probability) {
  WagerProfile w;
  w.expected_value = expectation(d);
  w.payoff = std::move(d);
  w.initial_bet = std::move(initial_bet);
  w.expected_total_bet = std::move(expected_total_bet);
  w.amount_at_risk = std::move(amount_at_risk);
  w.push_probability = std::move(push_probability);
  check_profile(w);
  return w;
}

WagerProfile WagerProfile::from_summary(Rational expected_value, Rational initial_bet, Rational expected_total_bet,
                                        Rational amount_at_risk, Rational push_probability) {
  WagerProfile w;
  w.expected_value = std::move(expected_value);
  w.initial_bet = std::move(initial_bet);
  w.expected_total_bet = std::move(expected_total_bet);
  w.amount_at_risk = std::move(amount_at_risk);
  w.push_probability = std::move(push_probability);
  check_profile(w);
  return w;
}

Rational house_advantage(const WagerProfile& w, PushConvention pushes, BetBasis basis) {
  Rational loss = -w.expected_value;
  if (pushes == PushConvention::kExclude) {
    if (w.push_probability == Rational(1)) {
      throw Error(ErrorCode::kDegeneratePushOnly, "every outcome is a push");
    }
    loss /= Rational(1) - w.push_probability;
  }
  switch (basis) {
    case BetBasis::kInitial: return loss / w.initial_bet;
    case BetBasis::kExpectedTotal: return loss / w.expected_total_bet;
    case BetBasis::kAtRisk: return loss / w.amount_at_risk;
  }
  return loss;
}

Odds odds_convert(const Rational& p) {
  if (p.sign() <= 0 || p >= Rational(1)) {
    throw Error(ErrorCode::kInvalidProbability, "odds need 0 < p < 1");
  }
  const Rational ratio = (Rational(1) - p) / p;
  return Odds{ratio.numerator(), ratio.denominator(), ratio};
}

namespace {

nlohmann::json number(const Rational& r, int digits) {
  return nlohmann::json{{"exact", r.str()}, {"decimal", r.decimal(digits)}};
}

}  // namespace

nlohmann::json distribution_json(const PayoffDistribution& d, int digits) {
  nlohmann::json atoms = nlohmann::json::array();
  for (const auto& a : d.atoms()) {
    atoms.push_back({{"payoff", a.payoff.str()}, {"prob", a.probability.str()},
                     {"prob_decimal", a.probability.decimal(digits)}});
  }
  return atoms;
}

nlohmann::json statistics_json(const PayoffDistribution& d, int digits) {
  const Rational var = variance(d);
  return {{"ev", number(expectation(d), digits)},
          {"var", number(var, digits)},
          {"sd", nlohmann::json{{"decimal", sqrt_approx(var, digits + 5).decimal(digits)}}}};
}

nlohmann::json house_advantage_json(const WagerProfile& w, int digits) {
  nlohmann::json out;
  const auto put = [&](const char* key, PushConvention pushes, BetBasis basis) {
    try {
      out[key] = number(house_advantage(w, pushes, basis), digits);
    } catch (const Error&) {
      out[key] = nullptr;
    }
  };
  put("ha_initial_include", PushConvention::kInclude, BetBasis::kInitial);
  put("ha_initial_exclude", PushConvention::kExclude, BetBasis::kInitial);
  put("ha_total_include", PushConvention::kInclude, BetBasis::kExpectedTotal);
  put("ha_total_exclude", PushConvention::kExclude, BetBasis::kExpectedTotal);
  put("ha_at_risk_include", PushConvention::kInclude, BetBasis::kAtRisk);
  return out;
}

}  // namespace house_edge
