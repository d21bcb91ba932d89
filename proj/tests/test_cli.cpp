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


#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "house_edge/cli.hpp"

using house_edge::cli::Format;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "house-edge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = house_edge::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exit codes") {
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"keno", "catch", "--spots", "x"}).code == 2);
  const auto e = call({"ruin", "--p", "1/2", "--q", "1/2", "--W", "0", "--L", "3"});
  CHECK(e.code == 1);
  CHECK(e.err.find("error") != std::string::npos);
  const auto h = call({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("roulette") != std::string::npos);
}

TEST_CASE("json envelope") {
  const auto r = call({"keno", "catch", "--spots", "10", "--catches", "6", "--json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["command"] == "keno catch");
  CHECK(j["inputs"]["spots"] == 10);
  CHECK(j["provenance"]["kind"] == "exact");
  CHECK(j["results"]["probability"]["exact"] == "24869385/2166436987");
  // Round trip is byte-identical.
  CHECK(j.dump(2) + "\n" == r.out);

  const auto v = call({"--format", "json", "vp", "hand", "--cards", "Ah 3d 5c 7c 9c"});
  REQUIRE(v.code == 0);
  const json vj = json::parse(v.out);
  CHECK(vj["results"]["best_hold"] == "Ah");
  CHECK(vj["results"]["table"]["rows"].size() == 32);
}

TEST_CASE("monte carlo provenance") {
  const auto r = call({"--json", "system", "sim", "--kind", "martingale", "--p", "18/38", "--trials", "2000",
                       "--seed", "7", "--bankroll", "63", "--horizon", "100"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["provenance"]["kind"] == "monte_carlo");
  CHECK(j["provenance"]["seed"] == 7);
  CHECK(j["provenance"]["trials"] == 2000);
  const auto again = call({"--json", "system", "sim", "--kind", "martingale", "--p", "18/38", "--trials", "2000",
                           "--seed", "7", "--bankroll", "63", "--horizon", "100", "--threads", "2"});
  CHECK(again.out == r.out);
}

TEST_CASE("csv") {
  CHECK(house_edge::cli::csv_field("plain") == "plain");
  CHECK(house_edge::cli::csv_field("a,b") == "\"a,b\"");
  CHECK(house_edge::cli::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(house_edge::cli::csv_field("two\nlines") == "\"two\nlines\"");
  const auto r = call({"--format", "csv", "lotto", "649"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("category,probability,one_in\r\n", 0) == 0);
  CHECK(r.out.find("\n") == r.out.find("\r\n") + 1);
  const auto e = call({"--format", "csv", "--exact", "craps", "pass"});
  CHECK(e.out.find("-1,251/495\r\n") != std::string::npos);
}

TEST_CASE("text and exact") {
  const auto t = call({"craps", "dontpass"});
  REQUIRE(t.code == 0);
  CHECK(t.out.find("0.0136364") != std::string::npos);
  const auto x = call({"--exact", "craps", "dontpass"});
  CHECK(x.out.find("3/220") != std::string::npos);
  const auto d = call({"--digits", "3", "craps", "dontpass"});
  CHECK(d.out.find("0.014") != std::string::npos);
}

TEST_CASE("render") {
  const json env = {{"command", "x"},
                    {"inputs", json::object()},
                    {"results", {{"value", {{"exact", "1/3"}, {"decimal", "0.333"}}}}},
                    {"provenance", {{"kind", "exact"}}}};
  CHECK(house_edge::cli::render(env, Format::kText, false).find("value: 0.333") != std::string::npos);
  CHECK(house_edge::cli::render(env, Format::kText, true).find("value: 1/3") != std::string::npos);
  CHECK(json::parse(house_edge::cli::render(env, Format::kJson, false)) == env);
}

TEST_CASE("out file and cache") {
  const auto dir = std::filesystem::temp_directory_path() / "house_edge_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto file = (dir / "o.json").string();
  CHECK(call({"--json", "--out", file, "lotto", "649"}).code == 0);
  std::ifstream in(file);
  const json j = json::parse(in);
  CHECK(j["command"] == "lotto 649");

  CHECK(house_edge::cli::fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(house_edge::cli::fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
