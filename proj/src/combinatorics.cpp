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

#include "house_edge/combinatorics.hpp"

#include <array>
#include <numeric>

#include "house_edge/error.hpp"

namespace house_edge {

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(long n, long r) {
  if (n < 0) throw Error(ErrorCode::kInvalidParameters, "binomial requires n >= 0");
  if (r < 0 || r > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

BigInt multinomial(unsigned n, std::span<const unsigned> parts) {
  const unsigned long total = std::accumulate(parts.begin(), parts.end(), 0UL);
  if (total != n) throw Error(ErrorCode::kPartsMismatch, "parts do not sum to n");
  BigInt out = factorial(n);
  for (unsigned part : parts) out /= factorial(part);
  return out;
}

namespace {

struct ChooseTable {
  std::array<std::array<std::uint64_t, 63>, 63> c{};
  ChooseTable() {
    for (int n = 0; n < 63; ++n) {
      c[n][0] = 1;
      for (int r = 1; r <= n; ++r) c[n][r] = c[n - 1][r - 1] + (r < n ? c[n - 1][r] : 0);
    }
  }
};

const ChooseTable kChoose;

}  // namespace

std::uint64_t choose(int n, int r) {
  if (n < 0 || r < 0 || r > n || n > 62) return 0;
  return kChoose.c[n][r];
}

}  // namespace house_edge
