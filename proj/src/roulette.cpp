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

#include "house_edge/roulette.hpp"

#include <array>
#include <utility>

#include "house_edge/error.hpp"

namespace house_edge::roulette {

int parse_pocket(std::string_view text) {
  if (text == "00") return kDoubleZero;
  int value = 0;
  if (text.empty() || text.size() > 2) throw Error(ErrorCode::kParse, "bad pocket '" + std::string(text) + "'");
  for (char c : text) {
    if (c < '0' || c > '9') throw Error(ErrorCode::kParse, "bad pocket '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  if (value > 36) throw Error(ErrorCode::kParse, "bad pocket '" + std::string(text) + "'");
  return value;
}

std::string pocket_name(int pocket) { return pocket == kDoubleZero ? "00" : std::to_string(pocket); }

bool is_red(int pocket) {
  static constexpr std::array<int, 18> kRed{1, 3, 5, 7, 9, 12, 14, 16, 18, 19, 21, 23, 25, 27, 30, 32, 34, 36};
  for (int r : kRed) {
    if (r == pocket) return true;
  }
  return false;
}

namespace {

bool is_five_number(const std::set<int>& numbers) {
  return numbers == std::set<int>{0, kDoubleZero, 1, 2, 3};
}

}  // namespace

RouletteBet make_bet(std::set<int> numbers, Rational size) {
  for (int n : numbers) {
    if (n < 0 || n >= kPockets) throw Error(ErrorCode::kIllegalSubset, "pocket out of range");
  }
  const std::size_t m = numbers.size();
  const bool permitted = m == 1 || m == 2 || m == 3 || m == 4 || m == 6 || m == 12 || m == 18 || m == 24;
  if (!permitted && !is_five_number(numbers)) {
    throw Error(ErrorCode::kIllegalSubset, "no bet covers " + std::to_string(m) + " numbers that way");
  }
  if (size.sign() <= 0) throw Error(ErrorCode::kInvalidParameters, "bet size must be positive");
  return RouletteBet{std::move(numbers), std::move(size)};
}

RouletteBet named_bet(std::string_view name, Rational size) {
  std::set<int> numbers;
  for (int n = 1; n <= 36; ++n) {
    bool take = false;
    if (name == "red") take = is_red(n);
    else if (name == "black") take = !is_red(n);
    else if (name == "even") take = n % 2 == 0;
    else if (name == "odd") take = n % 2 == 1;
    else if (name == "low") take = n <= 18;
    else if (name == "high") take = n > 18;
    else if (name == "col1") take = n % 3 == 1;
    else if (name == "col2") take = n % 3 == 2;
    else if (name == "col3") take = n % 3 == 0;
    else if (name == "dozen1") take = n <= 12;
    else if (name == "dozen2") take = n > 12 && n <= 24;
    else if (name == "dozen3") take = n > 24;
    else throw Error(ErrorCode::kIllegalSubset, "unknown outside bet '" + std::string(name) + "'");
    if (take) numbers.insert(n);
  }
  return make_bet(std::move(numbers), std::move(size));
}

Rational payoff_odds(const RouletteBet& b) {
  if (is_five_number(b.numbers)) return Rational(6);
  return Rational(36, static_cast<long long>(b.numbers.size())) - Rational(1);
}

Rational spin_payoff(const RouletteBet& b, int pocket) {
  return b.numbers.contains(pocket) ? payoff_odds(b) * b.size : -b.size;
}

Rational fair_spin_payoff(const RouletteBet& b, int pocket) {
  const Rational fair = Rational(36, static_cast<long long>(b.numbers.size())) - Rational(1);
  return b.numbers.contains(pocket) ? fair * b.size : -b.size;
}

PayoffDistribution bet_distribution(const RouletteBet& b) {
  const auto m = static_cast<long long>(b.numbers.size());
  return PayoffDistribution({{payoff_odds(b) * b.size, Rational(m, kPockets)},
                             {-b.size, Rational(kPockets - m, kPockets)}},
                            std::to_string(m) + "-number bet");
}

PayoffDistribution portfolio_distribution(const std::vector<RouletteBet>& bets) {
  std::vector<PayoffAtom> atoms;
  for (int pocket = 0; pocket < kPockets; ++pocket) {
    Rational net;
    for (const auto& b : bets) net += spin_payoff(b, pocket);
    atoms.push_back({net, Rational(1, kPockets)});
  }
  return PayoffDistribution(std::move(atoms), "portfolio").merged();
}

std::vector<RouletteBet> decompose(const RouletteBet& b) {
  std::vector<RouletteBet> out;
  const Rational each = b.size / Rational(static_cast<long long>(b.numbers.size()));
  for (int n : b.numbers) out.push_back(RouletteBet{{n}, each});
  return out;
}

namespace {

Approx critical(long spins, long pockets_divisor, const Rational& c, int digits) {
  if (spins < 1) throw Error(ErrorCode::kInvalidParameters, "need at least one spin");
  if (c.sign() < 0) throw Error(ErrorCode::kInvalidParameters, "c must be non-negative");
  const Approx root = sqrt_approx(Rational(spins), digits + 5);
  const Rational value = Rational(spins, pockets_divisor) + c * root.value;
  return Approx{value, root.exact, digits};
}

}  // namespace

Approx biased_wheel_critical(long spins, const Rational& c, int digits) { return critical(spins, 36, c, digits); }

Approx biased_wheel_critical_38(long spins, const Rational& c, int digits) {
  return critical(spins, 38, c, digits);
}

const std::map<std::string, Rational>& bias_presets() {
  static const std::map<std::string, Rational> kPresets{
      {"ethier_05", Rational(49, 100)},
      {"ethier_20", Rational(41, 100)},
      {"epstein_05", Rational(48, 100)},
      {"epstein_20", Rational(40, 100)},
  };
  return kPresets;
}

BiasVerdict bias_test(long spins, long top_count, const Rational& c, bool use_38) {
  BiasVerdict v;
  v.critical = use_38 ? biased_wheel_critical_38(spins, c) : biased_wheel_critical(spins, c);
  v.favorable = Rational(top_count) > v.critical.value;
  v.caveat =
      "valid only if the tested number was singled out as the most frequent of the same n spins; "
      "a number chosen after inspecting other data needs a different test";
  return v;
}

}  // namespace house_edge::roulette
