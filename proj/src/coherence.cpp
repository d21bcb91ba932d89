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

#include "house_edge/coherence.hpp"

#include <vector>

#include "house_edge/error.hpp"

namespace house_edge::coherence {

namespace {

void check_open_unit(const Rational& p, const char* name) {
  if (p.sign() <= 0 || p >= Rational(1)) {
    throw Error(ErrorCode::kInvalidProbability, std::string(name) + " must lie strictly in (0,1)");
  }
}

void check(const BetSystem& s) {
  check_open_unit(s.p_a, "P(A)");
  check_open_unit(s.p_ab, "P(A and B)");
  check_open_unit(s.p_b_given_a, "P(B | A)");
}

}  // namespace

RationalMatrix build_stake_matrix(const BetSystem& s) {
  check(s);
  const Rational one(1);
  const Rational win_a = s.p_a.reciprocal() - one;
  const Rational win_ab = s.p_ab.reciprocal() - one;
  const Rational win_b_given_a = s.p_b_given_a.reciprocal() - one;
  return RationalMatrix{
      {-one, -one, Rational()},
      {win_a, -one, -one},
      {win_a, win_ab, win_b_given_a},
  };
}

Rational determinant_by_row_operations(const BetSystem& s) {
  RationalMatrix m = build_stake_matrix(s);
  for (std::size_t r = 1; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) m(r, c) -= m(0, c);
  }
  // Row 1 is (-1, -1, 0); expand along it.
  const Rational minor0 = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  const Rational minor1 = m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0);
  return m(0, 0) * minor0 - m(0, 1) * minor1;
}

Verdict is_coherent(const BetSystem& s) {
  const RationalMatrix m = build_stake_matrix(s);
  const Rational det = m.determinant();
  const bool product_law = s.p_ab == s.p_a * s.p_b_given_a;
  if (det.is_zero() != product_law) {
    throw Error(ErrorCode::kInvalidParameters, "determinant test and product law disagree");
  }
  return Verdict{det.is_zero(), det};
}

std::array<Rational, 3> dutch_book(const BetSystem& s, Target target) {
  const Rational w = target == Target::kSureWin ? Rational(1) : Rational(-1);
  return dutch_book(s, {w, w, w});
}

std::array<Rational, 3> dutch_book(const BetSystem& s, const std::array<Rational, 3>& winnings) {
  const RationalMatrix m = build_stake_matrix(s);
  if (m.determinant().is_zero()) {
    throw Error(ErrorCode::kCoherentSystem, "det(M) = 0, no Dutch book exists");
  }
  const auto b = m.solve({winnings.begin(), winnings.end()});
  if (!b) throw Error(ErrorCode::kCoherentSystem, "singular stake matrix");
  const std::array<Rational, 3> stakes{(*b)[0], (*b)[1], (*b)[2]};
  if (settle(s, stakes) != winnings) {
    throw Error(ErrorCode::kInvalidParameters, "Dutch book failed settlement check");
  }
  return stakes;
}

std::array<Rational, 3> settle(const BetSystem& s, const std::array<Rational, 3>& stakes) {
  const RationalMatrix m = build_stake_matrix(s);
  const auto w = m * std::vector<Rational>{stakes.begin(), stakes.end()};
  return {w[0], w[1], w[2]};
}

}  // namespace house_edge::coherence
