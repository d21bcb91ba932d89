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

#ifndef HOUSE_EDGE_GAMETHEORY_HPP_
#define HOUSE_EDGE_GAMETHEORY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "house_edge/matrix.hpp"
#include "house_edge/rational.hpp"

namespace house_edge::gametheory {

// Row player maximizes, column player minimizes the row player's payoff.
struct MatrixGame {
  RationalMatrix payoff;
  std::vector<std::string> rows;
  std::vector<std::string> cols;
};

struct BimatrixGame {
  RationalMatrix a;  // row player's payoffs
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  RationalMatrix b;  // column player's payoffs
};

MatrixGame make_matrix_game(RationalMatrix payoff, std::vector<std::string> rows = {},
                            std::vector<std::string> cols = {});
BimatrixGame make_bimatrix_game(RationalMatrix a, RationalMatrix b, std::vector<std::string> rows = {},
                                std::vector<std::string> cols = {});
// The zero-sum game as a bimatrix game with b = -a.
BimatrixGame as_bimatrix(const MatrixGame& g);

struct Reduction {
  std::vector<std::size_t> rows;  // surviving indices into the original game
  std::vector<std::size_t> cols;
  std::vector<std::string> trace;
};

// Iterated elimination of strictly dominated pure strategies.
Reduction reduce_dominance(const MatrixGame& g);
Reduction reduce_dominance(const BimatrixGame& g);
MatrixGame restrict(const MatrixGame& g, const Reduction& r);
BimatrixGame restrict(const BimatrixGame& g, const Reduction& r);

struct MixedSolution {
  std::vector<Rational> row_mix;
  std::vector<Rational> col_mix;
  Rational value;                 // row player's expected payoff
  std::optional<Rational> value2;  // column player's, bimatrix only
};

Rational expected_payoff(const RationalMatrix& m, const std::vector<Rational>& p, const std::vector<Rational>& q);

// True when the row mix guarantees at least the value against every column
// and the column mix holds the row player to at most the value.
bool verify_minimax(const MatrixGame& g, const MixedSolution& s);
bool verify_nash(const BimatrixGame& g, const MixedSolution& s);

// Strict dominance, then a search over 1x1 and 2x2 subgames in lexicographic
// order; the first candidate that verifies on the full game is returned.
MixedSolution solve_zero_sum(const MatrixGame& g);

struct BimatrixSolutions {
  std::vector<MixedSolution> equilibria;
  bool degenerate = false;
};
// Support enumeration after strict dominance; the reduced game must have at
// most two rows or at most two columns.
BimatrixSolutions solve_bimatrix_2x2(const BimatrixGame& g);

enum class PotConvention { kNeutral, kOwned };
// Rows: check if loser / bet if loser (always bet a winner).
// Columns: fold / call when player 1 bets.
BimatrixGame basic_endgame(const Rational& ante, const Rational& bet, const Rational& p_win,
                           PotConvention convention);

MatrixGame game_from_json(const nlohmann::json& j);
BimatrixGame bimatrix_from_json(const nlohmann::json& j);

}  // namespace house_edge::gametheory

#endif  // HOUSE_EDGE_GAMETHEORY_HPP_
