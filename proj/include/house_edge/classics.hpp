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

#ifndef HOUSE_EDGE_CLASSICS_HPP_
#define HOUSE_EDGE_CLASSICS_HPP_

#include "house_edge/rational.hpp"

namespace house_edge {

// P(at least one six in `tosses` tosses of one die).
Rational mere_single_six(unsigned tosses = 4);

// P(at least one double six in `tosses` tosses of two dice) = 1 - (35/36)^n.
Rational mere_double_six(unsigned tosses = 24);

// Probability that A, needing `wins_needed_a` more wins, beats B, needing
// `wins_needed_b`, when A wins each trial with probability p.
Rational problem_of_points(unsigned wins_needed_a, unsigned wins_needed_b, const Rational& p);

// Win probability of the stay/switch strategy, by enumerating prize door,
// initial pick and the host's uniformly random legal reveal.
Rational monty_hall(bool switch_doors);

}  // namespace house_edge

#endif  // HOUSE_EDGE_CLASSICS_HPP_
