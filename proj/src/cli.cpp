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


#include "house_edge/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "house_edge/baccarat.hpp"
#include "house_edge/cards.hpp"
#include "house_edge/coherence.hpp"
#include "house_edge/craps.hpp"
#include "house_edge/error.hpp"
#include "house_edge/gametheory.hpp"
#include "house_edge/holdem.hpp"
#include "house_edge/lotteries.hpp"
#include "house_edge/roulette.hpp"
#include "house_edge/snackjack.hpp"
#include "house_edge/systems.hpp"
#include "house_edge/videopoker.hpp"
#include "house_edge/wager.hpp"

namespace house_edge::cli {

using nlohmann::json;

namespace {

constexpr const char* kCacheVersion = "v1";

bool is_number(const json& j) { return j.is_object() && j.contains("decimal") && j.size() <= 2; }
bool is_table(const json& j) { return j.is_object() && j.contains("columns") && j.contains("rows") && j.size() == 2; }

std::string scalar_text(const json& j, bool exact) {
  if (is_number(j)) {
    if (exact && j.contains("exact")) return j["exact"].get<std::string>();
    return j["decimal"].get<std::string>();
  }
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  if (j.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) s += ", ";
      s += scalar_text(j[i], exact);
    }
    return s;
  }
  return j.dump();
}

void text_table(const json& t, bool exact, const std::string& indent, std::ostringstream& os) {
  const auto& cols = t["columns"];
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head;
  for (const auto& c : cols) head.push_back(c.get<std::string>());
  cells.push_back(head);
  for (const auto& row : t["rows"]) {
    std::vector<std::string> r;
    for (const auto& c : row) r.push_back(scalar_text(c, exact));
    cells.push_back(r);
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& r : cells) {
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  for (const auto& r : cells) {
    os << indent;
    for (std::size_t i = 0; i < r.size(); ++i) {
      os << r[i];
      if (i + 1 < r.size()) os << std::string(width[i] - r[i].size() + 2, ' ');
    }
    os << '\n';
  }
}

void text_object(const json& obj, bool exact, const std::string& indent, std::ostringstream& os) {
  for (const auto& [key, v] : obj.items()) {
    if (is_table(v)) {
      os << indent << key << ":\n";
      text_table(v, exact, indent + "  ", os);
    } else if (v.is_object() && !is_number(v)) {
      os << indent << key << ":\n";
      text_object(v, exact, indent + "  ", os);
    } else if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
      os << indent << key << ":\n" << v.get<std::string>();
    } else {
      os << indent << key << ": " << scalar_text(v, exact) << '\n';
    }
  }
}

void flatten(const json& j, const std::string& prefix, bool exact, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object() && !is_number(j) && !is_table(j)) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, exact, out);
  } else {
    out.emplace_back(prefix, scalar_text(j, exact));
  }
}

const json* find_table(const json& j) {
  if (is_table(j)) return &j;
  if (!j.is_object()) return nullptr;
  if (j.contains("table") && is_table(j["table"])) return &j["table"];
  for (const auto& [k, v] : j.items()) {
    if (const json* t = find_table(v)) return t;
  }
  return nullptr;
}

}  // namespace

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string render(const json& envelope, Format format, bool exact) {
  std::ostringstream os;
  const json& results = envelope["results"];
  switch (format) {
    case Format::kJson:
      os << envelope.dump(2) << '\n';
      break;
    case Format::kCsv: {
      const auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
          if (i) os << ',';
          os << csv_field(fields[i]);
        }
        os << "\r\n";
      };
      if (const json* t = find_table(results)) {
        std::vector<std::string> head;
        for (const auto& c : (*t)["columns"]) head.push_back(c.get<std::string>());
        line(head);
        for (const auto& row : (*t)["rows"]) {
          std::vector<std::string> r;
          for (const auto& c : row) r.push_back(scalar_text(c, exact));
          line(r);
        }
      } else {
        std::vector<std::pair<std::string, std::string>> flat;
        flatten(results, "", exact, flat);
        line({"key", "value"});
        for (const auto& [k, v] : flat) line({k, v});
      }
      break;
    }
    case Format::kText:
      if (results.is_object()) {
        text_object(results, exact, "", os);
      } else {
        os << scalar_text(results, exact) << '\n';
      }
      if (envelope.contains("provenance") && envelope["provenance"].value("kind", "") == "monte_carlo") {
        os << "provenance: monte carlo, seed " << envelope["provenance"]["seed"].dump() << ", trials "
           << envelope["provenance"]["trials"].dump() << '\n';
      }
      break;
  }
  return os.str();
}

namespace {

struct Ctx {
  int digits = 7;
  unsigned threads = 0;
  std::string cache;
  std::ostream* err = nullptr;

  json num(const Rational& r) const { return {{"exact", r.str()}, {"decimal", r.decimal(digits)}}; }
  json approx(const Approx& a) const { return {{"decimal", a.decimal(digits)}}; }
};

// Owns the option variables bound by CLI11 for one invocation.
struct Store {
  std::vector<std::shared_ptr<void>> items;

  template <typename T, typename... A>
  T& make(A&&... init) {
    auto p = std::make_shared<T>(std::forward<A>(init)...);
    items.push_back(p);
    return *p;
  }
};

struct Command {
  std::string name;
  json inputs = json::object();
  json provenance = {{"kind", "exact"}};
  std::function<json()> run;
};

json table(std::vector<std::string> cols) { return {{"columns", cols}, {"rows", json::array()}}; }

Rational rat(const std::string& s) { return Rational::parse(s); }

std::uint64_t count(const std::string& s) {
  const Rational r = rat(s);
  if (!r.is_integer() || r.sign() <= 0 || !r.numerator().fits_ulong_p()) {
    throw Error(ErrorCode::kInvalidParameters, "'" + s + "' is not a positive count");
  }
  return r.numerator().get_ui();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    const auto b = cur.find_first_not_of(' ');
    const auto e = cur.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

std::map<int, Rational> int_paytable(const std::string& s) {
  std::map<int, Rational> out;
  for (const auto& item : split(s, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::kParse, "paytable entries look like k:pay");
    out[std::stoi(item.substr(0, colon))] = rat(item.substr(colon + 1));
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidParameters, "cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
}

// Content-addressed cache of whole result objects.
json cached(const Ctx& ctx, const std::string& key, const std::function<json()>& compute) {
  if (ctx.cache.empty()) return compute();
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << fnv1a(std::string(kCacheVersion) + "/" + key);
  const std::filesystem::path file = std::filesystem::path(ctx.cache) / (name.str() + ".json");
  if (std::ifstream in(file); in) {
    try {
      json j = json::parse(in);
      if (j.value("key", "") == key && j.value("version", "") == kCacheVersion) {
        *ctx.err << "cache hit " << file.string() << '\n';
        return j["results"];
      }
    } catch (const json::exception&) {
    }
  }
  json results = compute();
  std::error_code ec;
  std::filesystem::create_directories(ctx.cache, ec);
  std::ofstream out(file);
  if (out) out << json{{"key", key}, {"version", kCacheVersion}, {"results", results}}.dump() << '\n';
  return results;
}

class Timer {
 public:
  Timer(std::ostream& err, std::string what) : err_(err), what_(std::move(what)), t0_(std::chrono::steady_clock::now()) {
    err_ << what_ << "...\n";
  }
  ~Timer() {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0_);
    err_ << what_ << " done in " << ms.count() / 1000.0 << " s\n";
  }

 private:
  std::ostream& err_;
  std::string what_;
  std::chrono::steady_clock::time_point t0_;
};

json mix_json(const Ctx& ctx, const std::vector<Rational>& mix, const std::vector<std::string>& labels) {
  json t = table({"strategy", "probability"});
  for (std::size_t i = 0; i < mix.size(); ++i) {
    if (mix[i].is_zero()) continue;
    t["rows"].push_back({i < labels.size() ? labels[i] : std::to_string(i), ctx.num(mix[i])});
  }
  return t;
}

json solve_matrix(const Ctx& ctx, const gametheory::MatrixGame& g) {
  const auto red = gametheory::reduce_dominance(g);
  const auto s = gametheory::solve_zero_sum(g);
  return {{"kind", "zero-sum"},
          {"size", std::to_string(g.payoff.rows()) + "x" + std::to_string(g.payoff.cols())},
          {"reduced", std::to_string(red.rows.size()) + "x" + std::to_string(red.cols.size())},
          {"eliminations", red.trace},
          {"row_player", mix_json(ctx, s.row_mix, g.rows)},
          {"column_player", mix_json(ctx, s.col_mix, g.cols)},
          {"value", ctx.num(s.value)},
          {"minimax_verified", gametheory::verify_minimax(g, s)}};
}

json solve_bimatrix(const Ctx& ctx, const gametheory::BimatrixGame& g) {
  const auto red = gametheory::reduce_dominance(g);
  const auto sols = gametheory::solve_bimatrix_2x2(g);
  json eqs = json::array();
  for (const auto& s : sols.equilibria) {
    eqs.push_back({{"row_player", mix_json(ctx, s.row_mix, g.rows)},
                   {"column_player", mix_json(ctx, s.col_mix, g.cols)},
                   {"value_row", ctx.num(s.value)},
                   {"value_column", s.value2 ? ctx.num(*s.value2) : json(nullptr)},
                   {"nash_verified", gametheory::verify_nash(g, s)}});
  }
  json out{{"kind", "bimatrix"},
           {"size", std::to_string(g.a.rows()) + "x" + std::to_string(g.a.cols())},
           {"reduced", std::to_string(red.rows.size()) + "x" + std::to_string(red.cols.size())},
           {"eliminations", red.trace},
           {"degenerate", sols.degenerate}};
  for (std::size_t i = 0; i < eqs.size(); ++i) out["equilibrium_" + std::to_string(i + 1)] = eqs[i];
  return out;
}

json distribution_table(const Ctx& ctx, const PayoffDistribution& d) {
  json t = table({"payoff", "probability"});
  const PayoffDistribution merged = d.merged();
  for (const auto& a : merged.atoms()) t["rows"].push_back({ctx.num(a.payoff), ctx.num(a.probability)});
  return t;
}

json stats(const Ctx& ctx, const PayoffDistribution& d) {
  json j = statistics_json(d, ctx.digits);
  j["distribution"] = distribution_table(ctx, d);
  return j;
}

// ---------------------------------------------------------------- commands

void add_roulette(CLI::App& app, Ctx& ctx, Command& cmd, Store& store) {
  auto* r = app.add_subcommand("roulette", "American double-zero roulette");
  r->require_subcommand(1);

  auto* bet = r->add_subcommand("bet", "One bet: payoff odds, distribution, house advantage");
  auto& numbers = store.make<std::string>();
  auto& named = store.make<std::string>();
  auto& size = store.make<std::string>("1");
  bet->add_option("--numbers", numbers, "Comma-separated pockets, e.g. 0,00,1,2,3");
  bet->add_option("--named", named, "red, black, even, odd, low, high, col1-3, dozen1-3");
  bet->add_option("--size", size, "Amount bet")->capture_default_str();
  bet->callback([&] {
    cmd.name = "roulette bet";
    cmd.inputs = {{"numbers", numbers}, {"named", named}, {"size", size}};
    cmd.run = [&] {
      roulette::RouletteBet b;
      if (!named.empty()) {
        b = roulette::named_bet(named, rat(size));
      } else {
        if (numbers.empty()) throw CLI::ValidationError("--numbers or --named is required");
        std::set<int> pockets;
        for (const auto& p : split(numbers, ',')) pockets.insert(roulette::parse_pocket(p));
        b = roulette::make_bet(pockets, rat(size));
      }
      const auto d = roulette::bet_distribution(b);
      json j = stats(ctx, d);
      j["payoff_odds"] = roulette::payoff_odds(b).str() + " to 1";
      j["house_advantage"] = ctx.num(-expectation(d) / b.size);
      j["numbers"] = b.numbers.size();
      return j;
    };
  });

  auto* port = r->add_subcommand("portfolio", "Several bets on one spin");
  auto& specs = store.make<std::vector<std::string>>();
  port->add_option("--bet", specs, "NUMBERS[@SIZE] or NAME[@SIZE]; repeatable")->required();
  port->callback([&] {
    cmd.name = "roulette portfolio";
    cmd.inputs = {{"bets", specs}};
    cmd.run = [&] {
      std::vector<roulette::RouletteBet> bets;
      Rational total;
      for (const auto& spec : specs) {
        const auto at = spec.find('@');
        const std::string what = spec.substr(0, at);
        const Rational amount = at == std::string::npos ? Rational(1) : rat(spec.substr(at + 1));
        if (!what.empty() && std::isalpha(static_cast<unsigned char>(what[0])) && what.find(',') == std::string::npos) {
          bets.push_back(roulette::named_bet(what, amount));
        } else {
          std::set<int> pockets;
          for (const auto& p : split(what, ',')) pockets.insert(roulette::parse_pocket(p));
          bets.push_back(roulette::make_bet(pockets, amount));
        }
        total += amount;
      }
      const auto d = roulette::portfolio_distribution(bets);
      json j = stats(ctx, d);
      j["total_bet"] = ctx.num(total);
      j["house_advantage"] = ctx.num(-expectation(d) / total);
      return j;
    };
  });

  auto* bias = r->add_subcommand("bias", "Is the top pocket's count high enough to suggest a favorable bias?");
  auto& spins = store.make<long>(0);
  auto& top = store.make<long>(0);
  auto& preset = store.make<std::string>();
  auto& c = store.make<std::string>();
  auto& use38 = store.make<bool>(false);
  bias->add_option("--spins", spins, "Number of spins observed")->required();
  bias->add_option("--count", top, "Hits on the most frequent pocket")->required();
  bias->add_option("--preset", preset, "ethier_05, ethier_20, epstein_05, epstein_20");
  bias->add_option("--c", c, "Multiplier of sqrt(n) in the critical value");
  bias->add_flag("--wheel38", use38, "Use the 38-pocket critical value");
  bias->callback([&] {
    cmd.name = "roulette bias";
    cmd.inputs = {{"spins", spins}, {"count", top}, {"preset", preset}, {"c", c}, {"wheel38", use38}};
    cmd.run = [&] {
      Rational cc;
      if (!preset.empty()) {
        const auto& presets = roulette::bias_presets();
        auto it = presets.find(preset);
        if (it == presets.end()) throw Error(ErrorCode::kInvalidParameters, "unknown preset '" + preset + "'");
        cc = it->second;
      } else if (!c.empty()) {
        cc = rat(c);
      } else {
        throw CLI::ValidationError("--preset or --c is required");
      }
      const auto v = roulette::bias_test(spins, top, cc, use38);
      return json{{"critical_value", ctx.approx(v.critical)}, {"c", ctx.num(cc)}, {"favorable", v.favorable},
                  {"caveat", v.caveat}};
    };
  });
}

void add_craps(CLI::App& app, Ctx& ctx, Command& cmd, Store& store) {
  auto* cr = app.add_subcommand("craps", "Craps line bets, odds, hand length and the fire bet");
  cr->require_subcommand(1);
  cr->add_subcommand("pass", "Pass line")->callback([&] {
    cmd.name = "craps pass";
    cmd.run = [&] {
      const auto d = craps::pass_line();
      json j = stats(ctx, d);
      j["house_advantage"] = ctx.num(-expectation(d));
      return j;
    };
  });
  cr->add_subcommand("dontpass", "Don't pass (bar 12)")->callback([&] {
    cmd.name = "craps dontpass";
    cmd.run = [&] {
      const auto w = craps::dont_pass();
      json j = house_advantage_json(w, ctx.digits);
      j["ev"] = ctx.num(w.expected_value);
      j["push_probability"] = ctx.num(w.push_probability);
      return j;
    };
  });
  auto* odds = cr->add_subcommand("odds", "Pass line with m-times free odds");
  auto& m = store.make<std::string>("1");
  odds->add_option("--m", m, "Odds multiple")->capture_default_str();
  odds->callback([&] {
    cmd.name = "craps odds";
    cmd.inputs = {{"m", m}};
    cmd.run = [&] {
      const auto r = craps::pass_with_odds(rat(m));
      return json{{"ev", ctx.num(r.ev)}, {"expected_total_bet", ctx.num(r.expected_total_bet)},
                  {"house_advantage", ctx.num(r.ha)}};
    };
  });
  auto* hand = cr->add_subcommand("hand", "Length of the shooter's hand");
  auto& at_least = store.make<int>(154);
  hand->add_option("--at-least", at_least, "n in P(length >= n)")->capture_default_str();
  hand->callback([&] {
    cmd.name = "craps hand";
    cmd.inputs = {{"at_least", at_least}};
    cmd.run = [&] {
      const auto h = craps::hand_length(at_least);
      return json{{"survival", ctx.num(h.survival)},
                  {"one_in", h.survival.is_zero() ? json(nullptr) : json(h.survival.reciprocal().decimal(1))},
                  {"mean_length", ctx.num(h.mean)}};
    };
  });
  cr->add_subcommand("duration", "Expected rolls per pass-line decision")->callback([&] {
    cmd.name = "craps duration";
    cmd.run = [&] { return json{{"mean_rolls", ctx.num(craps::decision_duration_mean())}}; };
  });
  auto* fire = cr->add_subcommand("fire", "Fire bet");
  auto& pays = store.make<std::string>("4:24,5:249,6:999");
  fire->add_option("--paytable", pays, "points:pay pairs")->capture_default_str();
  fire->callback([&] {
    cmd.name = "craps fire";
    cmd.inputs = {{"paytable", pays}};
    cmd.run = [&] {
      const auto dist = craps::fire_distinct_points();
      json t = table({"distinct_points", "probability"});
      for (int k = 0; k <= 6; ++k) t["rows"].push_back({k, ctx.num(dist[static_cast<std::size_t>(k)])});
      const auto d = craps::fire_bet(int_paytable(pays));
      json j = statistics_json(d, ctx.digits);
      j["house_advantage"] = ctx.num(-expectation(d));
      j["table"] = t;
      return j;
    };
  });
}

void add_lotteries(CLI::App& app, Ctx& ctx, Command& cmd, Store& store) {
  auto* keno = app.add_subcommand("keno", "Keno catch probabilities and way tickets");
  keno->require_subcommand(1);
  auto* catch_ = keno->add_subcommand("catch", "P(catch k of n spots)");
  auto& spots = store.make<int>(10);
  auto& catches = store.make<int>(-1);
  auto& pool = store.make<int>(80);
  auto& drawn = store.make<int>(20);
  catch_->add_option("--spots", spots, "Spots marked")->capture_default_str();
  catch_->add_option("--catches", catches, "Catches (omit for all)");
  catch_->add_option("--pool", pool, "Numbers in the pool")->capture_default_str();
  catch_->add_option("--drawn", drawn, "Numbers drawn")->capture_default_str();
  catch_->callback([&] {
    cmd.name = "keno catch";
    cmd.inputs = {{"spots", spots}, {"catches", catches}, {"pool", pool}, {"drawn", drawn}};
    cmd.run = [&] {
      json t = table({"catches", "probability", "one_in"});
      const int lo = catches >= 0 ? catches : 0;
      const int hi = catches >= 0 ? catches : std::min(spots, drawn);
      for (int k = lo; k <= hi; ++k) {
        const Rational p = lotteries::keno_catch(lotteries::KenoTicket{spots, k, pool, drawn});
        t["rows"].push_back({k, ctx.num(p), p.is_zero() ? "-" : p.reciprocal().decimal(1)});
      }
      if (catches >= 0) {
        const Rational p = lotteries::keno_catch(lotteries::KenoTicket{spots, catches, pool, drawn});
        return json{{"probability", ctx.num(p)}, {"one_in", p.is_zero() ? json(nullptr) : json(p.reciprocal().decimal(1))}};
      }
      return json{{"table", t}};
    };
  });
  auto* way = keno->add_subcommand("way", "Way ticket: r groups of s spots, every choice of t groups");
  auto& r = store.make<int>(20);
  auto& s = store.make<int>(4);
  auto& t = store.make<int>(2);
  auto& pays = store.make<std::string>();
  auto& unit = store.make<std::string>("1");
  way->add_option("--r", r, "Groups")->capture_default_str();
  way->add_option("--s", s, "Spots per group")->capture_default_str();
  way->add_option("--t", t, "Groups per way")->capture_default_str();
  way->add_option("--paytable", pays, "catches:pay pairs for a t*s-spot ticket, per unit")->required();
  way->add_option("--unit", unit, "Bet per way")->capture_default_str();
  way->add_option("--pool", pool, "Numbers in the pool")->capture_default_str();
  way->add_option("--drawn", drawn, "Numbers drawn")->capture_default_str();
  way->callback([&] {
    cmd.name = "keno way";
    cmd.inputs = {{"r", r}, {"s", s}, {"t", t}, {"paytable", pays}, {"unit", unit}, {"pool", pool}, {"drawn", drawn}};
    cmd.run = [&] {
      const lotteries::WayTicket w{r, s, t, pool, drawn};
      const auto n = lotteries::way_ticket_count(w);
      const Rational u = rat(unit);
      const Rational gross = lotteries::way_ticket_ev(w, int_paytable(pays), u);
      const Rational cost = Rational(n) * u;
      return json{{"ways", n.get_str()}, {"cost", ctx.num(cost)}, {"expected_payout", ctx.num(gross)},
                  {"expected_return", ctx.num(gross / cost)}, {"house_advantage", ctx.num(Rational(1) - gross / cost)}};
    };
  });

  auto* lotto = app.add_subcommand("lotto", "6/49 lotto prize categories");
  lotto->require_subcommand(1);
  lotto->add_subcommand("649", "Category probabilities with the bonus number")->callback([&] {
    cmd.name = "lotto 649";
    cmd.run = [&] {
      json tb = table({"category", "probability", "one_in"});
      for (const auto& [cat, p] : lotteries::lotto_649_categories()) {
        tb["rows"].push_back({lotteries::lotto_category_name(cat), ctx.num(p), p.reciprocal().decimal(1)});
      }
      return json{{"table", tb}};
    };
  });
}

void add_baccarat(CLI::App& app, Ctx& ctx, Command& cmd, Store& store) {
  auto* b = app.add_subcommand("baccarat", "Baccarat Banker drawing rules");
  b->require_subcommand(1);
  b->add_subcommand("table", "Banker's drawing table (D = draw, S = stand)")->callback([&] {
    cmd.name = "baccarat table";
    cmd.run = [&] {
      std::vector<std::string> cols{"banker"};
      for (int y = 0; y <= 9; ++y) cols.push_back(std::to_string(y));
      cols.push_back("none");
      json t = table(cols);
      for (int x = 0; x <= 7; ++x) {
        json row = json::array({std::to_string(x)});
        for (int y = 0; y <= 10; ++y) {
          const int card = y == 10 ? baccarat::kNoCard : y;
          row.push_back(baccarat::banker_action(x, card) == baccarat::Action::kDraw ? "D" : "S");
        }
        t["rows"].push_back(row);
      }
      return json{{"table", t}};
    };
  });
  auto* ev = b->add_subcommand("ev", "Banker's expectation drawing or standing");
  auto& x = store.make<int>(3);
  auto& y = store.make<int>(8);
  ev->add_option("--x", x, "Banker's two-card total")->capture_default_str();
  ev->add_option("--y", y, "Player's third card, -1 if Player stood")->capture_default_str();
  ev->callback([&] {
    cmd.name = "baccarat ev";
    cmd.inputs = {{"x", x}, {"y", y}};
    cmd.run = [&] {
      const Rational d = baccarat::banker_choice_ev(x, y, baccarat::Action::kDraw);
      const Rational s = baccarat::banker_choice_ev(x, y, baccarat::Action::kStand);
      return json{{"draw", ctx.num(d)}, {"stand", ctx.num(s)},
                  {"table_action", baccarat::banker_action(x, y) == baccarat::Action::kDraw ? "draw" : "stand"},
                  {"better", d > s ? "draw" : (s > d ? "stand" : "either")}};
    };
  });
  b->add_subcommand("player", "Player bet expectation")->callback([&] {
    cmd.name = "baccarat player";
    cmd.run = [&] { return json{{"ev", ctx.num(baccarat::player_bet_ev())}}; };
  });

  auto* cdf = app.add_subcommand("cdf", "Chemin de fer as a two-person game");
  cdf->require_subcommand(1);
  auto* solve = cdf->add_subcommand("solve", "Solve the Player/Banker game");
  auto& commission = store.make<std::string>("0");
  solve->add_option("--commission", commission, "Commission on Banker wins")->capture_default_str();
  solve->callback([&] {
    cmd.name = "cdf solve";
    cmd.inputs = {{"commission", commission}};
    cmd.run = [&] {
      const auto g = baccarat::build_chemin_game(rat(commission));
      if (const auto* m = std::get_if<gametheory::MatrixGame>(&g)) return solve_matrix(ctx, *m);
      return solve_bimatrix(ctx, std::get<gametheory::BimatrixGame>(g));
    };
  });
}

void add_game(CLI::App& app, Ctx& ctx, Command& cmd, Store& store) {
  auto* g = app.add_subcommand("game", "Two-person games");
  g->require_subcommand(1);
  auto* solve = g->add_subcommand("solve", "Solve a game given as JSON {rows, cols, payoffs}");
  auto& file = store.make<std::string>();
  solve->add_option("--file", file, "JSON file; bimatrix cells are [a, b]")->required();
  solve->callback([&] {
    cmd.name = "game solve";
    cmd.inputs = {{"file", file}};
    cmd.run = [&] {
      const json j = read_json_file(file);
      const bool bi = j.contains("payoffs") && j["payoffs"].is_array() && !j["payoffs"].empty() &&
                      j["payoffs"][0].is_array() && !j["payoffs"][0].empty() && j["payoffs"][0][0].is_array();
      if (bi) return solve_bimatrix(ctx, gametheory::bimatrix_from_json(j));
      return solve_matrix(ctx, gametheory::game_from_json(j));
    };
  });
  auto* end = g->add_subcommand("endgame", "Basic endgame: ante, bet, P(player 1 holds the winner)");
  auto& ante = store.make<std::string>("1");
  auto& betsz = store.make<std::string>("1");
  auto& p = store.make<std::string>("1/2");
  auto& convention = store.make<std::string>("neutral");
  end->add_option("--ante", ante, "Ante")->capture_default_str();
  end->add_option("--bet", betsz, "Bet size")->capture_default_str();
  end->add_option("--p", p, "Probability player 1 wins")->capture_default_str();
  end->add_option("--convention", convention, "neutral or owned pot")
      ->check(CLI::IsMember({"neutral", "owned"}))
      ->capture_default_str();
  end->callback([&] {
    cmd.name = "game endgame";
    cmd.inputs = {{"ante", ante}, {"bet", betsz}, {"p", p}, {"convention", convention}};
    cmd.run = [&] {
      const auto conv = convention == "owned" ? gametheory::PotConvention::kOwned : gametheory::PotConvention::kNeutral;
      return solve_bimatrix(ctx, gametheory::basic_endgame(rat(ante), rat(betsz), rat(p), conv));
    };
  });
}

snackjack::Action parse_snack_action(const std::string& s) {
  if (s == "stand") return snackjack::Action::kStand;
  if (s == "hit") return snackjack::Action::kHit;
  if (s == "double") return snackjack::Action::kDouble;
  if (s == "split") return snackjack::Action::kSplit;
  throw Error(ErrorCode::kIllegalAction, "unknown action '" + s + "'");
}

void add_snackjack(CLI::App& app, Ctx& ctx, Command& cmd, Store& store) {
  auto* sj = app.add_subcommand("snackjack", "Snackjack (eight-card blackjack)");
  sj->require_subcommand(1);
  auto& natural = store.make<std::string>("3/2");
  auto& das = store.make<bool>(false);
  auto rules = [&natural, &das] {
    snackjack::Rules r;
    r.natural_payout = rat(natural);
    r.double_after_split = das;
    return r;
  };
  auto* strat = sj->add_subcommand("strategy", "Composition-dependent basic strategy");
  strat->add_option("--natural", natural, "Payout on a player natural")->capture_default_str();
  strat->add_flag("--das", das, "Allow doubling after splitting");
  strat->callback([&, rules] {
    cmd.name = "snackjack strategy";
    cmd.inputs = {{"natural", natural}, {"das", das}};
    cmd.run = [&, rules] {
      snackjack::Engine e(rules());
      const auto st = e.basic_strategy();
      json t = table({"hand", "up", "action", "ev", "tie"});
      for (const auto& p : st.points) {
        t["rows"].push_back({p.player.str(), snackjack::rank_name(p.upcard),
                             p.natural ? "natural" : snackjack::action_name(p.decision.action), ctx.num(p.decision.ev),
                             p.decision.tie ? "yes" : ""});
      }
      return json{{"decision_points", st.points.size()}, {"game_ev", ctx.num(st.game_ev)}, {"table", t}};
    };
  });
  auto* ev = sj->add_subcommand("ev", "Expectation of an action, given the dealer has no natural");
  auto& hand = store.make<std::string>("3,3");
  auto& up = store.make<std::string>("A");
  auto& action = store.make<std::string>();
  ev->add_option("--hand", hand, "Player's cards, e.g. 3,3")->capture_default_str();
  ev->add_option("--up", up, "Dealer upcard (A, 2, 3)")->capture_default_str();
  ev->add_option("--action", action, "stand, hit, double or split (omit for all)");
  ev->add_option("--natural", natural, "Payout on a player natural")->capture_default_str();
  ev->add_flag("--das", das, "Allow doubling after splitting");
  ev->callback([&, rules] {
    cmd.name = "snackjack ev";
    cmd.inputs = {{"hand", hand}, {"up", up}, {"action", action}, {"natural", natural}, {"das", das}};
    cmd.run = [&, rules] {
      snackjack::Engine e(rules());
      const auto s = snackjack::initial_state(snackjack::parse_hand(hand), snackjack::parse_rank(up));
      if (!action.empty()) return json{{"ev", ctx.num(e.action_ev(s, parse_snack_action(action)))}};
      const auto d = e.best(s);
      json t = table({"action", "ev"});
      for (const auto& [a, v] : d.evs) t["rows"].push_back({snackjack::action_name(a), ctx.num(v)});
      return json{{"best", snackjack::action_name(d.action)}, {"tie", d.tie}, {"table", t}};
    };
  });
}

videopoker::PayTable load_paytable(const std::string& name, const std::string& file) {
  if (!file.empty()) return videopoker::paytable_from_json(read_json_file(file));
  return videopoker::preset_paytable(name);
}

void add_videopoker(CLI::App& app, Ctx& ctx, Command& cmd, Store& store) {
  auto* vp = app.add_subcommand("vp", "Jacks or Better video poker");
  vp->require_subcommand(1);
  auto& name = store.make<std::string>("9-6");
  auto& file = store.make<std::string>();
  auto& hand_text = store.make<std::string>();
  auto* an = vp->add_subcommand("analyze", "Optimal-strategy return and variance over all 2,598,960 hands");
  an->add_option("--paytable", name, "Preset: 9-6, 9-6-940, 8-5, 8-5-2500")->capture_default_str();
  an->add_option("--file", file, "Pay table JSON file");
  an->callback([&] {
    cmd.name = "vp analyze";
    cmd.inputs = {{"paytable", file.empty() ? name : file}};
    cmd.run = [&] {
      const auto pt = load_paytable(name, file);
      return cached(ctx, "vp-analyze/" + videopoker::paytable_json(pt).dump() + "/" + std::to_string(ctx.digits), [&] {
        Timer timer(*ctx.err, "analyzing " + pt.name);
        videopoker::Analyzer analyzer;
        const auto g = analyzer.analyze(pt, ctx.threads);
        json classes = table({"class", "probability", "return"});
        for (int c = videopoker::kPayClasses - 1; c >= 0; --c) {
          classes["rows"].push_back({videopoker::pay_class_name(c), ctx.num(g.class_probability[static_cast<std::size_t>(c)]),
                                     ctx.num(pt.returns[static_cast<std::size_t>(c)])});
        }
        return json{{"return", ctx.num(g.expected_return)},
                    {"variance", ctx.num(g.variance())},
                    {"sd", ctx.approx(g.sd(ctx.digits + 3))},
                    {"royal_one_in", g.royal_probability.reciprocal().decimal(2)},
                    {"equivalence_classes", g.equivalence_classes},
                    {"distinct_values", g.distinct_values},
                    {"distinct_non_garbage", g.distinct_non_garbage},
                    {"tied_classes", g.tied_classes},
                    {"table", classes}};
      });
    };
  });
  auto* hd = vp->add_subcommand("hand", "All 32 holds of one hand, best first");
  hd->add_option("--cards", hand_text, "Five cards, e.g. \"Ah 3d 5c 7c 9c\"")->required();
  hd->add_option("--paytable", name, "Preset pay table")->capture_default_str();
  hd->add_option("--file", file, "Pay table JSON file");
  hd->callback([&] {
    cmd.name = "vp hand";
    cmd.inputs = {{"cards", hand_text}, {"paytable", file.empty() ? name : file}};
    cmd.run = [&] {
      const auto pt = load_paytable(name, file);
      const auto cards = cards::parse_cards(hand_text);
      const auto a = videopoker::analyze_hand(cards, pt);
      auto holds = a.per_hold;
      std::stable_sort(holds.begin(), holds.end(), [](const auto& l, const auto& r) { return l.ev > r.ev; });
      json t = table({"rank", "hold", "ev"});
      int rank = 0;
      for (const auto& h : holds) {
        const std::string held = videopoker::mask_cards(cards, h.mask);
        t["rows"].push_back({++rank, held.empty() ? "(discard all)" : held, ctx.num(h.ev)});
      }
      const std::string best = videopoker::mask_cards(cards, a.best.mask);
      return json{{"best_hold", best.empty() ? "(discard all)" : best}, {"best_ev", ctx.num(a.best.ev)}, {"tie", a.tie},
                  {"table", t}};
    };
  });
  auto* pt = vp->add_subcommand("paytable", "Validate and print a pay table");
  pt->add_option("--file", file, "Pay table JSON file");
  pt->add_option("--paytable", name, "Preset pay table")->capture_default_str();
  pt->callback([&] {
    cmd.name = "vp paytable";
    cmd.inputs = {{"paytable", file.empty() ? name : file}};
    cmd.run = [&] {
      const auto p = load_paytable(name, file);
      json t = table({"class", "return"});
      for (int c = videopoker::kPayClasses - 1; c >= 0; --c) {
        t["rows"].push_back({videopoker::pay_class_name(c), ctx.num(p.returns[static_cast<std::size_t>(c)])});
      }
      return json{{"name", p.name}, {"table", t}};
    };
  });
}

void add_holdem(CLI::App& app, Ctx& ctx, Command& cmd, Store& store) {
  auto* h = app.add_subcommand("holdem", "Heads-up Texas hold'em, all-in before the flop");
  h->require_subcommand(1);
  auto* mu = h->add_subcommand("matchup", "Exact matchup over all boards");
  auto& h1 = store.make<std::string>();
  auto& h2 = store.make<std::string>();
  auto& hand = store.make<std::string>();
  mu->add_option("--h1", h1, "First hand, e.g. \"As Ks\"")->required();
  mu->add_option("--h2", h2, "Second hand")->required();
  mu->callback([&] {
    cmd.name = "holdem matchup";
    cmd.inputs = {{"h1", h1}, {"h2", h2}};
    cmd.run = [&] {
      const auto r = holdem::matchup(cards::parse_cards(h1), cards::parse_cards(h2));
      const Rational n(static_cast<long long>(r.total));
      return json{{"boards", r.total},
                  {"h1_wins", ctx.num(Rational(static_cast<long long>(r.wins)) / n)},
                  {"ties", ctx.num(Rational(static_cast<long long>(r.ties)) / n)},
                  {"h2_wins", ctx.num(Rational(static_cast<long long>(r.losses)) / n)},
                  {"h1_net_gain", ctx.num(r.net_gain())}};
    };
  });
  auto* vr = h->add_subcommand("vsrandom", "Net gain against a random hand, exact");
  vr->add_option("--hand", hand, "Hole cards, e.g. \"2c 2d\"")->required();
  vr->callback([&] {
    cmd.name = "holdem vsrandom";
    cmd.inputs = {{"hand", hand}};
    cmd.run = [&] {
      Timer timer(*ctx.err, "enumerating " + hand);
      const auto v = holdem::vs_random(cards::parse_cards(hand), ctx.threads);
      return json{{"net_gain", ctx.num(v.net_gain())}, {"matchups_enumerated", v.matchups_run}, {"boards", v.counts.total}};
    };
  });
  auto* rk = h->add_subcommand("rank", "All 169 starting hands ranked by net gain against a random hand");
  auto& top = store.make<int>(169);
  rk->add_option("--top", top, "Rows to print")->capture_default_str();
  rk->callback([&] {
    cmd.name = "holdem rank";
    cmd.inputs = {{"top", top}};
    cmd.run = [&] {
      const json all = cached(ctx, "holdem-rank/" + std::to_string(ctx.digits), [&] {
        Timer timer(*ctx.err, "ranking 169 hands");
        const auto ranked = holdem::rank_all(ctx.threads);
        json rows = json::array();
        int rank = 0;
        for (const auto& r : ranked) rows.push_back({++rank, r.hand.name(), ctx.num(r.net_gain)});
        return json{{"columns", {"rank", "hand", "net_gain"}}, {"rows", rows}};
      });
      json t = all;
      if (top >= 0 && static_cast<std::size_t>(top) < t["rows"].size()) {
        t["rows"].erase(t["rows"].begin() + top, t["rows"].end());
      }
      return json{{"table", t}};
    };
  });
  h->add_subcommand("classes", "Heads-up matchups up to suit permutation")->callback([&] {
    cmd.name = "holdem classes";
    cmd.run = [&] { return json{{"matchup_classes", holdem::matchup_class_count()}}; };
  });
}

void add_systems(CLI::App& app, Ctx& ctx, Command& cmd, Store& store) {
  auto* sys = app.add_subcommand("system", "Betting systems");
  sys->require_subcommand(1);
  auto* sim = sys->add_subcommand("sim", "Seeded Monte Carlo of a betting system");
  auto& kind = store.make<std::string>("martingale");
  auto& list = store.make<std::string>();
  auto& p = store.make<std::string>("18/38");
  auto& trials = store.make<std::string>("100000");
  auto& unit = store.make<std::string>("1");
  auto& policy = store.make<std::string>("forfeit");
  auto& seed = store.make<std::uint64_t>(42);
  auto& horizon = store.make<std::int64_t>(10000);
  auto& bankroll = store.make<std::optional<std::int64_t>>();
  auto& limit = store.make<std::optional<std::int64_t>>();
  auto& target = store.make<std::optional<std::int64_t>>();
  sim->add_option("--kind", kind, "martingale, fibonacci, labouchere, dalembert")
      ->check(CLI::IsMember({"martingale", "fibonacci", "labouchere", "dalembert"}))
      ->capture_default_str();
  sim->add_option("--list", list, "Initial list (Labouchere, Fibonacci)");
  sim->add_option("--p", p, "Win probability per coup")->capture_default_str();
  sim->add_option("--trials", trials, "Number of trials")->capture_default_str();
  sim->add_option("--seed", seed, "RNG seed")->capture_default_str();
  sim->add_option("--horizon", horizon, "Maximum coups per trial")->capture_default_str();
  sim->add_option("--unit", unit, "Base unit")->capture_default_str();
  sim->add_option("--bankroll", bankroll, "Bankroll in units");
  sim->add_option("--limit", limit, "House limit in units");
  sim->add_option("--policy", policy, "At the limit: forfeit or cap")
      ->check(CLI::IsMember({"forfeit", "cap"}))
      ->capture_default_str();
  sim->add_option("--target", target, "Stop once profit reaches this many units");
  sim->callback([&] {
    cmd.name = "system sim";
    const std::uint64_t n = count(trials);
    cmd.inputs = {{"kind", kind}, {"list", list}, {"p", p}, {"trials", n}, {"seed", seed}, {"horizon", horizon},
                  {"unit", unit}, {"policy", policy}};
    if (bankroll) cmd.inputs["bankroll"] = *bankroll;
    if (limit) cmd.inputs["limit"] = *limit;
    if (target) cmd.inputs["target"] = *target;
    cmd.provenance = {{"kind", "monte_carlo"}, {"seed", seed}, {"trials", n}};
    cmd.run = [&, n] {
      systems::SystemConfig c;
      c.kind = systems::parse_kind(kind);
      c.unit = rat(unit);
      for (const auto& x : split(list, ',')) c.initial_list.push_back(std::stoll(x));
      c.bankroll = bankroll;
      c.house_limit = limit;
      c.target = target;
      c.limit_policy = policy == "cap" ? systems::LimitPolicy::kCap : systems::LimitPolicy::kForfeit;
      const auto s = systems::simulate(c, rat(p), n, seed, horizon, ctx.threads);
      json j = systems::simulation_json(s, ctx.digits);
      json mb = table({"max_bet_units", "trials"});
      for (const auto& [k, v] : s.max_bet) mb["rows"].push_back({k, v});
      j["max_bet"] = mb;
      json bq = table({"quantile", "bankroll_units"});
      for (const auto& [q, v] : s.bankroll_quantiles) bq["rows"].push_back({q, v});
      j["bankroll_quantiles"] = bq;
      return j;
    };
  });

  auto* ruin = app.add_subcommand("ruin", "Gambler's ruin: P(win W units before losing L)");
  auto& rp = store.make<std::string>("244/495");
  auto& rq = store.make<std::string>();
  auto& W = store.make<int>(10);
  auto& L = store.make<int>(10);
  ruin->add_option("--p", rp, "Win probability")->capture_default_str();
  ruin->add_option("--q", rq, "Loss probability (default 1 - p)");
  ruin->add_option("--W", W, "Units to win")->capture_default_str();
  ruin->add_option("--L", L, "Units to lose")->capture_default_str();
  ruin->callback([&] {
    cmd.name = "ruin";
    cmd.inputs = {{"p", rp}, {"q", rq}, {"W", W}, {"L", L}};
    cmd.run = [&] {
      const Rational pp = rat(rp);
      const Rational qq = rq.empty() ? Rational(1) - pp : rat(rq);
      return json{{"p_win", ctx.num(systems::ruin_probability(systems::make_ruin_problem(pp, qq, W, L)))}};
    };
  });

  auto* kelly = app.add_subcommand("kelly", "Kelly fraction and growth rate");
  auto& kp = store.make<std::string>("0.6");
  auto& kb = store.make<std::string>("1");
  auto& kf = store.make<std::string>();
  kelly->add_option("--p", kp, "Win probability")->capture_default_str();
  kelly->add_option("--b", kb, "Payoff odds b to 1")->capture_default_str();
  kelly->add_option("--f", kf, "Also evaluate growth at this fraction");
  kelly->callback([&] {
    cmd.name = "kelly";
    cmd.inputs = {{"p", kp}, {"b", kb}, {"f", kf}};
    cmd.run = [&] {
      const auto k = systems::kelly(rat(kp), rat(kb));
      std::ostringstream g;
      g << std::setprecision(ctx.digits) << std::fixed << static_cast<double>(k.growth(k.fraction));
      json j{{"fraction", ctx.num(k.fraction)}, {"growth", json{{"decimal", g.str()}}}};
      if (!kf.empty()) {
        std::ostringstream h;
        h << std::setprecision(ctx.digits) << std::fixed << static_cast<double>(k.growth(rat(kf)));
        j["growth_at_f"] = json{{"decimal", h.str()}};
      }
      return j;
    };
  });

  auto* bold = app.add_subcommand("boldplay", "Bold play success probability");
  auto& bf = store.make<std::string>("1/4");
  auto& bp = store.make<std::string>("18/38");
  bold->add_option("--f", bf, "Initial fortune, dyadic in (0, 1)")->capture_default_str();
  bold->add_option("--p", bp, "Win probability")->capture_default_str();
  bold->callback([&] {
    cmd.name = "boldplay";
    cmd.inputs = {{"f", bf}, {"p", bp}};
    cmd.run = [&] { return json{{"p_success", ctx.num(systems::bold_play(rat(bf), rat(bp)))}}; };
  });
}

void add_coherence(CLI::App& app, Ctx& ctx, Command& cmd, Store& store) {
  auto* c = app.add_subcommand("coherence", "Coherence of P(A), P(AB), P(B|A) and a Dutch book when incoherent");
  auto& pa = store.make<std::string>();
  auto& pab = store.make<std::string>();
  auto& pba = store.make<std::string>();
  auto& target = store.make<std::string>("sure-win");
  c->add_option("--pa", pa, "P(A)")->required();
  c->add_option("--pab", pab, "P(AB)")->required();
  c->add_option("--pba", pba, "P(B|A)")->required();
  c->add_option("--target", target, "sure-win or sure-loss for the bettor")
      ->check(CLI::IsMember({"sure-win", "sure-loss"}))
      ->capture_default_str();
  c->callback([&] {
    cmd.name = "coherence";
    cmd.inputs = {{"pa", pa}, {"pab", pab}, {"pba", pba}, {"target", target}};
    cmd.run = [&] {
      const coherence::BetSystem s{rat(pa), rat(pab), rat(pba)};
      const auto v = coherence::is_coherent(s);
      json j{{"coherent", v.coherent}, {"determinant", ctx.num(v.det)}};
      if (!v.coherent) {
        const auto stakes = coherence::dutch_book(
            s, target == "sure-loss" ? coherence::Target::kSureLoss : coherence::Target::kSureWin);
        const auto w = coherence::settle(s, stakes);
        json t = table({"bet", "stake"});
        const char* names[] = {"A", "AB", "B given A"};
        for (std::size_t i = 0; i < 3; ++i) t["rows"].push_back({names[i], ctx.num(stakes[i])});
        j["stakes"] = t;
        j["winnings"] = json::array({ctx.num(w[0]), ctx.num(w[1]), ctx.num(w[2])});
      }
      return j;
    };
  });
}

CLI::App* deepest(CLI::App* app) {
  while (true) {
    const auto subs = app->get_subcommands();
    if (subs.empty()) return app;
    app = subs.front();
  }
}

void fallthrough_all(CLI::App* app) {
  for (auto* s : app->get_subcommands({})) {
    s->fallthrough();
    fallthrough_all(s);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact house-advantage and strategy calculators for casino games", "house-edge"};
  Ctx ctx;
  ctx.err = &err;
  Command cmd;
  Store store;
  std::string format = "text", out_file, cache;
  bool exact = false, json_flag = false;
  int threads = 0;
  app.add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
  app.add_flag("--json", json_flag, "Same as --format json");
  app.add_option("--digits", ctx.digits, "Decimal places")->check(CLI::Range(0, 200))->capture_default_str();
  app.add_flag("--exact", exact, "Print exact rationals in text and csv output");
  app.add_option("--out", out_file, "Write output to FILE");
  app.add_option("--threads", threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--cache", cache, "Directory for cached enumeration results (HOUSE_EDGE_CACHE overrides)");
  app.require_subcommand(1);

  add_roulette(app, ctx, cmd, store);
  add_craps(app, ctx, cmd, store);
  add_lotteries(app, ctx, cmd, store);
  add_baccarat(app, ctx, cmd, store);
  add_game(app, ctx, cmd, store);
  add_snackjack(app, ctx, cmd, store);
  add_videopoker(app, ctx, cmd, store);
  add_holdem(app, ctx, cmd, store);
  add_systems(app, ctx, cmd, store);
  add_coherence(app, ctx, cmd, store);
  fallthrough_all(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << deepest(&app)->help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << deepest(&app)->help();
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n\n" << deepest(&app)->help();
    return 2;
  }
  if (!cmd.run) {
    err << deepest(&app)->help();
    return 2;
  }

  ctx.threads = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
  ctx.cache = cache;
  if (const char* env = std::getenv("HOUSE_EDGE_CACHE"); env && *env) ctx.cache = env;
  const Format fmt = json_flag || format == "json" ? Format::kJson : (format == "csv" ? Format::kCsv : Format::kText);

  json envelope;
  try {
    envelope = {{"command", cmd.name}, {"inputs", cmd.inputs}, {"results", cmd.run()}, {"provenance", cmd.provenance}};
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n\n" << deepest(&app)->help();
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  const std::string text = render(envelope, fmt, exact);
  if (!out_file.empty()) {
    std::ofstream f(out_file, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << out_file << '\n';
      return 1;
    }
    f << text;
  } else {
    out << text;
  }
  return 0;
}

}  // namespace house_edge::cli
