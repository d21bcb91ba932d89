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

#include "house_edge/classics.hpp"

#include "house_edge/combinatorics.hpp"
#include "house_edge/distributions.hpp"
#include "house_edge/error.hpp"

namespace house_edge {

Rational mere_single_six(unsigned tosses) {
  return Rational(1) - pmf(DistributionSpec::binomial(tosses, Rational(1, 6)), 0);
}

Rational mere_double_six(unsigned tosses) { return Rational(1) - Rational(35, 36).pow(tosses); }

Rational problem_of_points(unsigned wins_needed_a, unsigned wins_needed_b, const Rational& p) {
  if (p.sign() < 0 || p > Rational(1)) {
    throw Error(ErrorCode::kInvalidParameters, "p must lie in [0,1]");
  }
  if (wins_needed_a == 0 || wins_needed_b == 0) {
    throw Error(ErrorCode::kInvalidParameters, "wins needed must be positive");
  }
  // Play out all a+b-1 remaining trials; A wins iff at least a of them go A's way.
  const long trials = static_cast<long>(wins_needed_a + wins_needed_b) - 1;
  const auto spec = DistributionSpec::binomial(trials, p);
  Rational total;
  for (long k = wins_needed_a; k <= trials; ++k) total += pmf(spec, k);
  return total;
}

Rational monty_hall(bool switch_doors) {
  Rational win;
  const Rational third(1, 3);
  for (int prize = 0; prize < 3; ++prize) {
    for (int pick = 0; pick < 3; ++pick) {
      int legal = 0;
      for (int open = 0; open < 3; ++open) legal += (open != pick && open != prize);
      for (int open = 0; open < 3; ++open) {
        if (open == pick || open == prize) continue;
        const int final_pick = switch_doors ? 3 - pick - open : pick;
        if (final_pick == prize) win += third * third * Rational(1, legal);
      }
    }
  }
  return win;
}

}  // namespace house_edge
