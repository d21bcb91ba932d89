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

#include "house_edge/gametheory.hpp"

#include <algorithm>

#include "house_edge/error.hpp"

namespace house_edge::gametheory {

namespace {

std::vector<std::string> default_labels(std::vector<std::string> labels, std::size_t n, const char* prefix) {
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
  }
  if (labels.size() != n) throw Error(ErrorCode::kInvalidParameters, "label count does not match the matrix");
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidParameters, "strategy labels must be unique");
  }
  return labels;
}

RationalMatrix negate(const RationalMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = -m(i, j);
  }
  return out;
}

RationalMatrix sub_matrix(const RationalMatrix& m, const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols) {
  RationalMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  }
  return out;
}

template <typename T>
std::vector<T> pick(const std::vector<T>& v, const std::vector<std::size_t>& idx) {
  std::vector<T> out;
  for (std::size_t i : idx) out.push_back(v[i]);
  return out;
}

std::vector<Rational> expand(const std::vector<Rational>& mix, const std::vector<std::size_t>& idx, std::size_t n) {
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < idx.size(); ++i) out[idx[i]] = mix[i];
  return out;
}

bool is_mix(const std::vector<Rational>& p, std::size_t n) {
  if (p.size() != n) return false;
  Rational total;
  for (const auto& x : p) {
    if (x.sign() < 0) return false;
    total += x;
  }
  return total == Rational(1);
}

// Row payoffs against a column mix, and column payoffs against a row mix.
std::vector<Rational> row_payoffs(const RationalMatrix& m, const std::vector<Rational>& q) {
  std::vector<Rational> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!q[j].is_zero()) out[i] += m(i, j) * q[j];
    }
  }
  return out;
}

std::vector<Rational> col_payoffs(const RationalMatrix& m, const std::vector<Rational>& p) {
  std::vector<Rational> out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (!p[i].is_zero()) out[j] += m(i, j) * p[i];
    }
  }
  return out;
}

// Every strategy in the support of `mix` earns the maximum of `payoffs`.
bool supports_best(const std::vector<Rational>& payoffs, const std::vector<Rational>& mix) {
  const Rational best = *std::max_element(payoffs.begin(), payoffs.end());
  for (std::size_t i = 0; i < mix.size(); ++i) {
    if (!mix[i].is_zero() && payoffs[i] != best) return false;
  }
  return true;
}

}  // namespace

MatrixGame make_matrix_game(RationalMatrix payoff, std::vector<std::string> rows, std::vector<std::string> cols) {
  if (payoff.rows() == 0 || payoff.cols() == 0) throw Error(ErrorCode::kInvalidParameters, "empty game");
  MatrixGame g;
  g.rows = default_labels(std::move(rows), payoff.rows(), "r");
  g.cols = default_labels(std::move(cols), payoff.cols(), "c");
  g.payoff = std::move(payoff);
  return g;
}

BimatrixGame make_bimatrix_game(RationalMatrix a, RationalMatrix b, std::vector<std::string> rows,
                                std::vector<std::string> cols) {
  if (a.rows() == 0 || a.cols() == 0) throw Error(ErrorCode::kInvalidParameters, "empty game");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::kInvalidParameters, "payoff shapes differ");
  BimatrixGame g;
  g.rows = default_labels(std::move(rows), a.rows(), "r");
  g.cols = default_labels(std::move(cols), a.cols(), "c");
  g.a = std::move(a);
  g.b = std::move(b);
  return g;
}

BimatrixGame as_bimatrix(const MatrixGame& g) { return BimatrixGame{g.payoff, g.rows, g.cols, negate(g.payoff)}; }

Reduction reduce_dominance(const BimatrixGame& g) {
  Reduction r;
  for (std::size_t i = 0; i < g.a.rows(); ++i) r.rows.push_back(i);
  for (std::size_t j = 0; j < g.a.cols(); ++j) r.cols.push_back(j);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < r.rows.size() && !changed; ++x) {
      for (std::size_t y = 0; y < r.rows.size() && !changed; ++y) {
        if (x == y) continue;
        const bool dominated = std::all_of(r.cols.begin(), r.cols.end(),
                                           [&](std::size_t j) { return g.a(r.rows[y], j) > g.a(r.rows[x], j); });
        if (dominated) {
          r.trace.push_back("row " + g.rows[r.rows[x]] + " strictly dominated by " + g.rows[r.rows[y]]);
          r.rows.erase(r.rows.begin() + static_cast<long>(x));
          changed = true;
        }
      }
    }
    for (std::size_t x = 0; x < r.cols.size() && !changed; ++x) {
      for (std::size_t y = 0; y < r.cols.size() && !changed; ++y) {
        if (x == y) continue;
        const bool dominated = std::all_of(r.rows.begin(), r.rows.end(),
                                           [&](std::size_t i) { return g.b(i, r.cols[y]) > g.b(i, r.cols[x]); });
        if (dominated) {
          r.trace.push_back("column " + g.cols[r.cols[x]] + " strictly dominated by " + g.cols[r.cols[y]]);
          r.cols.erase(r.cols.begin() + static_cast<long>(x));
          changed = true;
        }
      }
    }
  }
  return r;
}

Reduction reduce_dominance(const MatrixGame& g) { return reduce_dominance(as_bimatrix(g)); }

MatrixGame restrict(const MatrixGame& g, const Reduction& r) {
  return MatrixGame{sub_matrix(g.payoff, r.rows, r.cols), pick(g.rows, r.rows), pick(g.cols, r.cols)};
}

BimatrixGame restrict(const BimatrixGame& g, const Reduction& r) {
  return BimatrixGame{sub_matrix(g.a, r.rows, r.cols), pick(g.rows, r.rows), pick(g.cols, r.cols),
                      sub_matrix(g.b, r.rows, r.cols)};
}

Rational expected_payoff(const RationalMatrix& m, const std::vector<Rational>& p, const std::vector<Rational>& q) {
  Rational total;
  const auto rows = row_payoffs(m, q);
  for (std::size_t i = 0; i < rows.size(); ++i) total += p[i] * rows[i];
  return total;
}

bool verify_minimax(const MatrixGame& g, const MixedSolution& s) {
  if (!is_mix(s.row_mix, g.payoff.rows()) || !is_mix(s.col_mix, g.payoff.cols())) return false;
  for (const auto& v : col_payoffs(g.payoff, s.row_mix)) {
    if (v < s.value) return false;
  }
  for (const auto& v : row_payoffs(g.payoff, s.col_mix)) {
    if (v > s.value) return false;
  }
  return true;
}

bool verify_nash(const BimatrixGame& g, const MixedSolution& s) {
  if (!is_mix(s.row_mix, g.a.rows()) || !is_mix(s.col_mix, g.a.cols())) return false;
  return supports_best(row_payoffs(g.a, s.col_mix), s.row_mix) && supports_best(col_payoffs(g.b, s.row_mix), s.col_mix);
}

namespace {

// Mixed solution of a 2x2 zero-sum game without a saddle point.
std::optional<MixedSolution> kernel_2x2(const RationalMatrix& m) {
  const Rational& a = m(0, 0);
  const Rational& b = m(0, 1);
  const Rational& c = m(1, 0);
  const Rational& d = m(1, 1);
  const Rational den = a - b - c + d;
  if (den.is_zero()) return std::nullopt;
  const Rational p = (d - c) / den;
  const Rational q = (d - b) / den;
  if (p.sign() < 0 || p > Rational(1) || q.sign() < 0 || q > Rational(1)) return std::nullopt;
  MixedSolution s;
  s.row_mix = {p, Rational(1) - p};
  s.col_mix = {q, Rational(1) - q};
  s.value = (a * d - b * c) / den;
  return s;
}

}  // namespace

MixedSolution solve_zero_sum(const MatrixGame& g) {
  const Reduction red = reduce_dominance(g);
  const RationalMatrix& m = g.payoff;
  auto attempt = [&](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
                     const MixedSolution& local) -> std::optional<MixedSolution> {
    MixedSolution s;
    s.row_mix = expand(local.row_mix, rows, m.rows());
    s.col_mix = expand(local.col_mix, cols, m.cols());
    s.value = local.value;
    if (verify_minimax(g, s)) return s;
    return std::nullopt;
  };
  // Saddle points first.
  for (std::size_t i : red.rows) {
    for (std::size_t j : red.cols) {
      MixedSolution local{{Rational(1)}, {Rational(1)}, m(i, j), std::nullopt};
      if (auto s = attempt({i}, {j}, local)) return *s;
    }
  }
  for (std::size_t x = 0; x < red.rows.size(); ++x) {
    for (std::size_t y = x + 1; y < red.rows.size(); ++y) {
      for (std::size_t u = 0; u < red.cols.size(); ++u) {
        for (std::size_t v = u + 1; v < red.cols.size(); ++v) {
          const std::vector<std::size_t> rows{red.rows[x], red.rows[y]};
          const std::vector<std::size_t> cols{red.cols[u], red.cols[v]};
          const auto local = kernel_2x2(sub_matrix(m, rows, cols));
          if (!local) continue;
          if (auto s = attempt(rows, cols, *local)) return *s;
        }
      }
    }
  }
  throw Error(ErrorCode::kUnsolvedGame, "no 1x1 or 2x2 kernel verifies; the game needs a general LP solver");
}

namespace {

bool has_ties(const BimatrixGame& g) {
  // A pure strategy with two or more pure best responses.
  for (std::size_t j = 0; j < g.a.cols(); ++j) {
    std::vector<Rational> col;
    for (std::size_t i = 0; i < g.a.rows(); ++i) col.push_back(g.a(i, j));
    if (std::count(col.begin(), col.end(), *std::max_element(col.begin(), col.end())) > 1) return true;
  }
  for (std::size_t i = 0; i < g.b.rows(); ++i) {
    std::vector<Rational> row;
    for (std::size_t j = 0; j < g.b.cols(); ++j) row.push_back(g.b(i, j));
    if (std::count(row.begin(), row.end(), *std::max_element(row.begin(), row.end())) > 1) return true;
  }
  return false;
}

// Candidate mixes for a player with at most two strategies: pure ones plus
// those making the opponent indifferent between two of their strategies.
// `opp(k, s)` is the opponent's payoff for strategy s when we play k.
template <typename Payoff>
std::vector<std::vector<Rational>> two_strategy_candidates(std::size_t mine, std::size_t theirs, Payoff opp) {
  std::vector<std::vector<Rational>> out;
  if (mine == 1) return {{Rational(1)}};
  out.push_back({Rational(1), Rational(0)});
  out.push_back({Rational(0), Rational(1)});
  for (std::size_t s = 0; s < theirs; ++s) {
    for (std::size_t t = s + 1; t < theirs; ++t) {
      // p*opp(0,s) + (1-p)*opp(1,s) = p*opp(0,t) + (1-p)*opp(1,t)
      const Rational den = opp(0, s) - opp(1, s) - opp(0, t) + opp(1, t);
      if (den.is_zero()) continue;
      const Rational p = (opp(1, t) - opp(1, s)) / den;
      if (p.sign() <= 0 || p >= Rational(1)) continue;
      out.push_back({p, Rational(1) - p});
    }
  }
  return out;
}

// Column candidates for a game whose row player has two strategies: every
// pure column plus pairs that make the row player indifferent.
std::vector<std::vector<Rational>> column_candidates(const RationalMatrix& a) {
  const std::size_t n = a.cols();
  std::vector<std::vector<Rational>> out;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> q(n);
    q[j] = Rational(1);
    out.push_back(q);
  }
  if (a.rows() < 2) return out;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      const Rational den = a(0, s) - a(1, s) - a(0, t) + a(1, t);
      if (den.is_zero()) continue;
      const Rational q = (a(1, t) - a(0, t)) / den;
      if (q.sign() <= 0 || q >= Rational(1)) continue;
      std::vector<Rational> mix(n);
      mix[s] = q;
      mix[t] = Rational(1) - q;
      out.push_back(mix);
    }
  }
  return out;
}

RationalMatrix transpose(const RationalMatrix& m) {
  RationalMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  }
  return out;
}

// All candidate equilibria of a game with at most two rows.
std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> enumerate_two_row(const BimatrixGame& g) {
  std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> out;
  const auto rows = two_strategy_candidates(g.a.rows(), g.a.cols(),
                                            [&](std::size_t k, std::size_t s) { return g.b(k, s); });
  const auto cols = column_candidates(g.a);
  for (const auto& p : rows) {
    for (const auto& q : cols) {
      MixedSolution s{p, q, Rational(0), Rational(0)};
      if (verify_nash(g, s)) out.emplace_back(p, q);
    }
  }
  return out;
}

}  // namespace

BimatrixSolutions solve_bimatrix_2x2(const BimatrixGame& g) {
  const Reduction red = reduce_dominance(g);
  const BimatrixGame r = restrict(g, red);
  std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> local;
  if (r.a.rows() <= 2) {
    local = enumerate_two_row(r);
  } else if (r.a.cols() <= 2) {
    const BimatrixGame t{transpose(r.b), r.cols, r.rows, transpose(r.a)};
    for (auto& [p, q] : enumerate_two_row(t)) local.emplace_back(q, p);
  } else {
    throw Error(ErrorCode::kUnsolvedGame, "reduced game is larger than 2 x n");
  }
  BimatrixSolutions out;
  out.degenerate = has_ties(r);
  for (const auto& [p, q] : local) {
    MixedSolution s;
    s.row_mix = expand(p, red.rows, g.a.rows());
    s.col_mix = expand(q, red.cols, g.a.cols());
    s.value = expected_payoff(g.a, s.row_mix, s.col_mix);
    s.value2 = expected_payoff(g.b, s.row_mix, s.col_mix);
    if (!verify_nash(g, s)) continue;
    const bool seen = std::any_of(out.equilibria.begin(), out.equilibria.end(), [&](const MixedSolution& e) {
      return e.row_mix == s.row_mix && e.col_mix == s.col_mix;
    });
    if (!seen) out.equilibria.push_back(std::move(s));
  }
  if (out.equilibria.empty()) throw Error(ErrorCode::kUnsolvedGame, "no equilibrium found by support enumeration");
  return out;
}

BimatrixGame basic_endgame(const Rational& ante, const Rational& bet, const Rational& p_win,
                           PotConvention convention) {
  if (ante.sign() <= 0 || bet.sign() <= 0 || p_win.sign() <= 0 || p_win >= Rational(1)) {
    throw Error(ErrorCode::kInvalidParameters, "need a > 0, b > 0, 0 < P < 1");
  }
  const Rational& a = ante;
  const Rational& b = bet;
  const Rational& P = p_win;
  const Rational Q = Rational(1) - P;
  RationalMatrix pa{{2 * a * P, P * (2 * a + b)}, {2 * a, P * (2 * a + b) - Q * b}};
  RationalMatrix pb{{2 * a * Q, -b * P + 2 * a * Q}, {Rational(0), -P * b + Q * (2 * a + b)}};
  if (convention == PotConvention::kOwned) {
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        pa(i, j) -= a;
        pb(i, j) -= a;
      }
    }
  }
  return make_bimatrix_game(std::move(pa), std::move(pb), {"check if loser", "bet if loser"},
                            {"fold", "call"});
}

namespace {

Rational cell_value(const nlohmann::json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw Error(ErrorCode::kParse, "payoffs must be rationals written as strings or integers");
}

std::vector<std::string> labels(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return {};
  return j.at(key).get<std::vector<std::string>>();
}

}  // namespace

MatrixGame game_from_json(const nlohmann::json& j) {
  try {
    const auto& rows = j.at("payoffs");
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols()) throw Error(ErrorCode::kParse, "payoff matrix is not rectangular");
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = cell_value(rows[i][k]);
    }
    return make_matrix_game(std::move(m), labels(j, "rows"), labels(j, "cols"));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("game file: ") + e.what());
  }
}

BimatrixGame bimatrix_from_json(const nlohmann::json& j) {
  try {
    const auto& rows = j.at("payoffs");
    const std::size_t n = rows.empty() ? 0 : rows[0].size();
    RationalMatrix a(rows.size(), n);
    RationalMatrix b(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != n) throw Error(ErrorCode::kParse, "payoff matrix is not rectangular");
      for (std::size_t k = 0; k < n; ++k) {
        const auto& cell = rows[i][k];
        if (!cell.is_array() || cell.size() != 2) throw Error(ErrorCode::kParse, "bimatrix cells are [a, b] pairs");
        a(i, k) = cell_value(cell[0]);
        b(i, k) = cell_value(cell[1]);
      }
    }
    return make_bimatrix_game(std::move(a), std::move(b), labels(j, "rows"), labels(j, "cols"));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("game file: ") + e.what());
  }
}

}  // namespace house_edge::gametheory
