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

#ifndef HOUSE_EDGE_COMBINATORICS_HPP_
#define HOUSE_EDGE_COMBINATORICS_HPP_

#include <cstdint>
#include <span>

#include "house_edge/rational.hpp"

namespace house_edge {

BigInt factorial(unsigned n);

// C(n, r); zero when r < 0 or r > n so that tail and convolution sums need no
// special cases. Requires n >= 0.
BigInt binomial(long n, long r);

// n! / prod(parts[i]!). Throws PartsMismatch unless the parts sum to n.
BigInt multinomial(unsigned n, std::span<const unsigned> parts);

// Machine-word binomial for the enumeration hot paths (n <= 62).
std::uint64_t choose(int n, int r);

}  // namespace house_edge

#endif  // HOUSE_EDGE_COMBINATORICS_HPP_
