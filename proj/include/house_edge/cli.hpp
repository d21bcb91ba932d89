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


#ifndef HOUSE_EDGE_CLI_HPP_
#define HOUSE_EDGE_CLI_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "json.hpp"

namespace house_edge::cli {

enum class Format { kText, kJson, kCsv };

// Parses argv, runs the command and writes the rendered envelope to `out`
// (or --out FILE). Returns 0 on success, 2 on usage errors, 1 when the
// computation itself fails.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Envelope: {command, inputs, results, provenance}. Numbers appear as
// {"exact": "p/q", "decimal": "..."}; tables as {"columns": [...], "rows": [[...]]}.
std::string render(const nlohmann::json& envelope, Format format, bool exact);

// RFC 4180 field quoting.
std::string csv_field(std::string_view s);

// 64-bit FNV-1a, used for cache keys.
std::uint64_t fnv1a(std::string_view s);

}  // namespace house_edge::cli

#endif  // HOUSE_EDGE_CLI_HPP_
