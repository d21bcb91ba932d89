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


#include "doctest.h"
#include "house_edge/craps.hpp"
#include "house_edge/error.hpp"
#include "house_edge/wager.hpp"

using namespace house_edge;

TEST_SUITE("wager") {

TEST_CASE("expectation") {
  const PayoffDistribution single({{Rational(35), Rational(1, 38)}, {Rational(-1), Rational(37, 38)}});
  CHECK(expectation(single) == Rational(-1, 19));
  CHECK(expectation(PayoffDistribution({{Rational(0), Rational(1)}})) == Rational(0));
  const PayoffDistribution cuban({{Rational(3), Rational(4, 38)},
                                  {Rational(1), Rational(8, 38)},
                                  {Rational(0), Rational(14, 38)},
                                  {Rational(-2), Rational(12, 38)}});
  CHECK(expectation(cuban) == Rational(-2, 19));
}

TEST_CASE("variance") {
  CHECK(variance(PayoffDistribution({{Rational(7), Rational(1)}})) == Rational(0));
  CHECK(variance(PayoffDistribution({{Rational(1), Rational(1, 2)}, {Rational(-1), Rational(1, 2)}})) == Rational(1));
  const PayoffDistribution single({{Rational(35), Rational(1, 38)}, {Rational(-1), Rational(37, 38)}});
  const Rational second = Rational(35 * 35, 38) + Rational(37, 38);
  CHECK(second == Rational(1262, 38));
  CHECK(variance(single) == second - Rational(1, 361));
}

TEST_CASE("distribution validation") {
  CHECK_THROWS_AS(PayoffDistribution({{Rational(1), Rational(1, 2)}}), Error);
  CHECK_THROWS_AS(PayoffDistribution({{Rational(1), Rational(3, 2)}, {Rational(0), Rational(-1, 2)}}), Error);
}

TEST_CASE("convolve") {
  const PayoffDistribution coin({{Rational(1), Rational(1, 2)}, {Rational(-1), Rational(1, 2)}});
  const auto two = convolve(coin, coin).merged();
  CHECK(two.atoms().size() == 3);
  CHECK(two.probability_of(Rational(0)) == Rational(1, 2));
  CHECK(expectation(two) == Rational(0));
  CHECK(variance(two) == Rational(2));
}

TEST_CASE("house advantage conventions") {
  const auto dp = craps::dont_pass();
  CHECK(house_advantage(dp, PushConvention::kInclude, BetBasis::kInitial) == Rational(27, 1980));
  CHECK(house_advantage(dp, PushConvention::kExclude, BetBasis::kInitial) == Rational(27, 1925));
  CHECK(Rational(27, 1980).decimal(7) == "0.0136364");
  CHECK(Rational(27, 1925).decimal(7) == "0.0140260");

  const auto tcp = WagerProfile::from_summary(Rational(-686689, 20358520), Rational(1), Rational(34084400, 20358520),
                                              Rational(1), Rational(0));
  CHECK(house_advantage(tcp, PushConvention::kInclude, BetBasis::kExpectedTotal) == Rational(686689, 34084400));
  CHECK(house_advantage(tcp, PushConvention::kInclude, BetBasis::kInitial).decimal(7) == "0.0337298");

  // A $5 keno ticket that always returns at least $1 has $4 at risk.
  const PayoffDistribution keno({{Rational(-4), Rational(9, 10)}, {Rational(35), Rational(1, 10)}});
  const auto w = WagerProfile::from_distribution(keno, Rational(5), Rational(5), Rational(4), Rational(0));
  CHECK(house_advantage(w, PushConvention::kInclude, BetBasis::kAtRisk) == -expectation(keno) / Rational(4));
}

TEST_CASE("odds") {
  CHECK(odds_convert(Rational(1, 2)).str() == "1 to 1");
  const auto five = odds_convert(Rational(5, 38));
  CHECK(five.str() == "33 to 5");
  CHECK(five.to_one.decimal(1) == "6.6");
  CHECK(odds_convert(Rational(1, 38)).str() == "37 to 1");
}

}  // TEST_SUITE
