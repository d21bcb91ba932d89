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

#ifndef HOUSE_EDGE_COHERENCE_HPP_
#define HOUSE_EDGE_COHERENCE_HPP_

#include <array>

#include "house_edge/matrix.hpp"
#include "house_edge/rational.hpp"

namespace house_edge::coherence {

// Subjective prices for three bets: on A, on A and B, and on B conditional
// on A (called off when A fails). Each price is a probability in (0,1).
struct BetSystem {
  Rational p_a;
  Rational p_ab;
  Rational p_b_given_a;
};

// Rows are the partition cells D1 = A^c, D2 = A B^c, D3 = A B; columns are
// the three bets. Entry (i, j) is bet j's net payoff per unit staked on D_i.
RationalMatrix build_stake_matrix(const BetSystem& s);

struct Verdict {
  bool coherent = false;
  Rational det;
};

// Coherent iff det(M) = 0; also cross-checks det(M) = 0 against the product
// law p_ab = p_a * p_b_given_a and throws if the two ever disagree.
Verdict is_coherent(const BetSystem& s);

// det(M) after subtracting row 1 from rows 2 and 3, expanded on the reduced
// matrix. Independent of the elimination used by is_coherent.
Rational determinant_by_row_operations(const BetSystem& s);

enum class Target { kSureWin, kSureLoss };

// Stakes b with M b = w, for w = (1,1,1) or (-1,-1,-1). Throws CoherentSystem
// when det(M) = 0.
std::array<Rational, 3> dutch_book(const BetSystem& s, Target target);
// Same for an arbitrary target winnings vector.
std::array<Rational, 3> dutch_book(const BetSystem& s, const std::array<Rational, 3>& winnings);

// Winnings on D1, D2, D3 for a stake vector.
std::array<Rational, 3> settle(const BetSystem& s, const std::array<Rational, 3>& stakes);

}  // namespace house_edge::coherence

#endif  // HOUSE_EDGE_COHERENCE_HPP_
