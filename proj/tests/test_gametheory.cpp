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


#include <algorithm>
#include <random>

#include "doctest.h"
#include "house_edge/error.hpp"
#include "house_edge/gametheory.hpp"

using namespace house_edge;
using namespace house_edge::gametheory;

namespace {

// Strict dominance, scanning columns before rows and from the back.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> reduce_oracle(const RationalMatrix& m) {
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(i);
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(j);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = cols.size(); a-- > 0 && !changed;) {
      for (std::size_t b : cols) {
        if (b == cols[a]) continue;
        bool dominated = true;  // column cols[a] gives the row player strictly more than b everywhere
        for (std::size_t i : rows) dominated = dominated && m(i, cols[a]) > m(i, b);
        if (dominated) {
          cols.erase(cols.begin() + static_cast<long>(a));
          changed = true;
          break;
        }
      }
    }
    for (std::size_t a = rows.size(); a-- > 0 && !changed;) {
      for (std::size_t b : rows) {
        if (b == rows[a]) continue;
        bool dominated = true;
        for (std::size_t j : cols) dominated = dominated && m(rows[a], j) < m(b, j);
        if (dominated) {
          rows.erase(rows.begin() + static_cast<long>(a));
          changed = true;
          break;
        }
      }
    }
  }
  return {rows, cols};
}

}  // namespace

TEST_SUITE("gametheory") {

TEST_CASE("dominance") {
  const auto g = make_matrix_game(RationalMatrix{{3, 3}, {1, 1}});
  const auto r = reduce_dominance(g);
  CHECK(r.rows.size() == 1);
  CHECK(r.cols.size() == 2);
  CHECK_FALSE(r.trace.empty());

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 300; ++t) {
    RationalMatrix m(4, 5);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = Rational(d(rng));
    const auto red = reduce_dominance(make_matrix_game(m));
    const auto [rows, cols] = reduce_oracle(m);
    std::vector<std::size_t> rr = red.rows, rc = red.cols;
    std::sort(rr.begin(), rr.end());
    std::sort(rc.begin(), rc.end());
    CHECK(rr == rows);
    CHECK(rc == cols);
  }
}

TEST_CASE("zero-sum solutions") {
  const auto pennies = make_matrix_game(RationalMatrix{{1, -1}, {-1, 1}});
  const auto s = solve_zero_sum(pennies);
  CHECK(s.row_mix == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(s.col_mix == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(s.value == Rational(0));

  // Row 1 is a saddle: its minimum 2 equals column 2's maximum.
  const auto saddle = make_matrix_game(RationalMatrix{{1, 0, 5}, {4, 2, 3}, {0, 1, 6}});
  const auto p = solve_zero_sum(saddle);
  CHECK(p.value == Rational(2));
  CHECK(p.row_mix[1] == Rational(1));
  CHECK(p.col_mix[1] == Rational(1));
  CHECK(verify_minimax(saddle, p));

  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int t = 0; t < 100; ++t) {
    RationalMatrix m(2, 4);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = Rational(d(rng));
    const auto g = make_matrix_game(m);
    CHECK(verify_minimax(g, solve_zero_sum(g)));
  }
}

TEST_CASE("bimatrix") {
  const auto pennies = make_matrix_game(RationalMatrix{{1, -1}, {-1, 1}});
  const auto b = solve_bimatrix_2x2(as_bimatrix(pennies));
  REQUIRE(b.equilibria.size() == 1);
  CHECK(b.equilibria[0].row_mix == solve_zero_sum(pennies).row_mix);

  const auto sexes = make_bimatrix_game(RationalMatrix{{2, 0}, {0, 1}}, RationalMatrix{{1, 0}, {0, 2}});
  const auto e = solve_bimatrix_2x2(sexes);
  CHECK(e.equilibria.size() == 3);
  bool mixed = false;
  for (const auto& s : e.equilibria) {
    CHECK(verify_nash(sexes, s));
    if (s.row_mix[0] == Rational(2, 3) && s.col_mix[0] == Rational(1, 3)) mixed = true;
  }
  CHECK(mixed);
}

TEST_CASE("basic endgame") {
  const Rational a(1), bet(2), p(1, 3);
  const auto neutral = basic_endgame(a, bet, p, PotConvention::kNeutral);
  CHECK(neutral.a(1, 0) == Rational(2) * a);
  CHECK(neutral.b(1, 0) == Rational(0));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(neutral.a(i, j) + neutral.b(i, j) == Rational(2) * a);
  const auto owned = basic_endgame(a, bet, p, PotConvention::kOwned);
  CHECK(owned.a(1, 0) == a);
  CHECK(owned.b(1, 0) == -a);
  const auto sols = solve_bimatrix_2x2(neutral);
  REQUIRE_FALSE(sols.equilibria.empty());
  for (const auto& s : sols.equilibria) CHECK(verify_nash(neutral, s));
}

TEST_CASE("json input") {
  const auto j = nlohmann::json::parse(R"({"rows":["U","D"],"cols":["L","R"],"payoffs":[["1","-1"],[-1,1]]})");
  const auto g = game_from_json(j);
  CHECK(g.rows[1] == "D");
  CHECK(g.payoff(0, 1) == Rational(-1));
  const auto bj = nlohmann::json::parse(R"({"payoffs":[[[2,1],[0,0]],[[0,0],[1,2]]]})");
  const auto bg = bimatrix_from_json(bj);
  CHECK(bg.b(1, 1) == Rational(2));
  CHECK_THROWS_AS(make_matrix_game(RationalMatrix{{1, 2}}, {"A", "A"}), Error);
}

}  // TEST_SUITE
