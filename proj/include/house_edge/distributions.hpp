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

#ifndef HOUSE_EDGE_DISTRIBUTIONS_HPP_
#define HOUSE_EDGE_DISTRIBUTIONS_HPP_

#include <vector>

#include "house_edge/rational.hpp"

namespace house_edge {

enum class DistributionKind {
  kBinomial,
  kHypergeometric,
  kMultivariateHypergeometric,
  kMultinomial,
  kGeometric,
  kNegativeBinomial,
  kPoisson,
};

// Parameters of one of the standard discrete distributions. Construct through
// the named factories, which enforce each kind's parameter domain.
//
// Conventions: geometric and negative binomial count trials up to and
// including the (r-th) success, so their supports start at 1 (resp. r).
struct DistributionSpec {
  DistributionKind kind = DistributionKind::kBinomial;
  long n = 0;            // trials (binomial, multinomial) or draws (hypergeometric)
  long population = 0;   // hypergeometric population size
  long successes = 0;    // hypergeometric success states; negative binomial r
  Rational p;            // success probability or Poisson mean
  std::vector<long> counts;      // multivariate hypergeometric category sizes
  std::vector<Rational> probs;   // multinomial category probabilities

  static DistributionSpec binomial(long trials, const Rational& p);
  static DistributionSpec hypergeometric(long population, long successes, long draws);
  static DistributionSpec multivariate_hypergeometric(std::vector<long> counts, long draws);
  static DistributionSpec multinomial(long trials, std::vector<Rational> probs);
  static DistributionSpec geometric(const Rational& p);
  static DistributionSpec negative_binomial(long r, const Rational& p);
  static DistributionSpec poisson(const Rational& mean);
};

// Exact probability mass at `k` for the univariate exact kinds. Outcomes
// outside the support have mass 0. Poisson is rejected here; use poisson_pmf.
Rational pmf(const DistributionSpec& spec, long k);

// Exact joint mass for the multivariate kinds.
Rational pmf(const DistributionSpec& spec, const std::vector<long>& outcome);

// P(X = k) for Poisson(mean), truncated to `digits` decimal places.
Approx poisson_pmf(const DistributionSpec& spec, long k, int digits = 50);

// Exact mean for the univariate exact kinds.
Rational mean(const DistributionSpec& spec);

}  // namespace house_edge

#endif  // HOUSE_EDGE_DISTRIBUTIONS_HPP_
