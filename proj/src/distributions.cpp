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

#include "house_edge/distributions.hpp"

#include <numeric>
#include <utility>

#include "house_edge/combinatorics.hpp"
#include "house_edge/error.hpp"

namespace house_edge {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidParameters, what);
}

bool is_probability(const Rational& p) { return p.sign() >= 0 && p <= Rational(1); }

}  // namespace

DistributionSpec DistributionSpec::binomial(long trials, const Rational& p) {
  require(trials >= 0, "binomial: n must be >= 0");
  require(is_probability(p), "binomial: p must lie in [0,1]");
  DistributionSpec s;
  s.kind = DistributionKind::kBinomial;
  s.n = trials;
  s.p = p;
  return s;
}

DistributionSpec DistributionSpec::hypergeometric(long population, long successes, long draws) {
  require(population >= 0 && successes >= 0 && draws >= 0, "hypergeometric: negative parameter");
  require(successes <= population, "hypergeometric: successes exceed population");
  require(draws <= population, "hypergeometric: sample exceeds population");
  DistributionSpec s;
  s.kind = DistributionKind::kHypergeometric;
  s.population = population;
  s.successes = successes;
  s.n = draws;
  return s;
}

DistributionSpec DistributionSpec::multivariate_hypergeometric(std::vector<long> counts, long draws) {
  require(!counts.empty(), "multivariate hypergeometric: no categories");
  long total = 0;
  for (long c : counts) {
    require(c >= 0, "multivariate hypergeometric: negative category size");
    total += c;
  }
  require(draws >= 0 && draws <= total, "multivariate hypergeometric: sample exceeds population");
  DistributionSpec s;
  s.kind = DistributionKind::kMultivariateHypergeometric;
  s.counts = std::move(counts);
  s.population = total;
  s.n = draws;
  return s;
}

DistributionSpec DistributionSpec::multinomial(long trials, std::vector<Rational> probs) {
  require(trials >= 0, "multinomial: n must be >= 0");
  require(!probs.empty(), "multinomial: no categories");
  Rational total;
  for (const auto& p : probs) {
    require(is_probability(p), "multinomial: probabilities must lie in [0,1]");
    total += p;
  }
  require(total == Rational(1), "multinomial: probabilities must sum to 1");
  DistributionSpec s;
  s.kind = DistributionKind::kMultinomial;
  s.n = trials;
  s.probs = std::move(probs);
  return s;
}

DistributionSpec DistributionSpec::geometric(const Rational& p) {
  require(p.sign() > 0 && p <= Rational(1), "geometric: p must lie in (0,1]");
  DistributionSpec s;
  s.kind = DistributionKind::kGeometric;
  s.p = p;
  return s;
}

DistributionSpec DistributionSpec::negative_binomial(long r, const Rational& p) {
  require(r >= 1, "negative binomial: r must be >= 1");
  require(p.sign() > 0 && p <= Rational(1), "negative binomial: p must lie in (0,1]");
  DistributionSpec s;
  s.kind = DistributionKind::kNegativeBinomial;
  s.successes = r;
  s.p = p;
  return s;
}

DistributionSpec DistributionSpec::poisson(const Rational& mean) {
  require(mean.sign() > 0, "poisson: mean must be > 0");
  DistributionSpec s;
  s.kind = DistributionKind::kPoisson;
  s.p = mean;
  return s;
}

Rational pmf(const DistributionSpec& spec, long k) {
  const Rational one(1);
  switch (spec.kind) {
    case DistributionKind::kBinomial:
      if (k < 0 || k > spec.n) return {};
      return Rational(binomial(spec.n, k)) * spec.p.pow(static_cast<unsigned>(k)) *
             (one - spec.p).pow(static_cast<unsigned>(spec.n - k));
    case DistributionKind::kHypergeometric:
      if (k < 0 || k > spec.n) return {};
      return Rational(binomial(spec.successes, k) * binomial(spec.population - spec.successes, spec.n - k),
                      binomial(spec.population, spec.n));
    case DistributionKind::kGeometric:
      if (k < 1) return {};
      return (one - spec.p).pow(static_cast<unsigned>(k - 1)) * spec.p;
    case DistributionKind::kNegativeBinomial: {
      const long r = spec.successes;
      if (k < r) return {};
      return Rational(binomial(k - 1, r - 1)) * spec.p.pow(static_cast<unsigned>(r)) *
             (one - spec.p).pow(static_cast<unsigned>(k - r));
    }
    case DistributionKind::kPoisson:
      throw Error(ErrorCode::kInvalidParameters, "poisson has no exact pmf; use poisson_pmf");
    case DistributionKind::kMultivariateHypergeometric:
    case DistributionKind::kMultinomial:
      throw Error(ErrorCode::kInvalidParameters, "multivariate distribution needs a vector outcome");
  }
  return {};
}

Rational pmf(const DistributionSpec& spec, const std::vector<long>& outcome) {
  if (spec.kind == DistributionKind::kMultivariateHypergeometric) {
    if (outcome.size() != spec.counts.size()) {
      throw Error(ErrorCode::kInvalidParameters, "outcome dimension mismatch");
    }
    long drawn = 0;
    BigInt ways = 1;
    for (std::size_t i = 0; i < outcome.size(); ++i) {
      if (outcome[i] < 0 || outcome[i] > spec.counts[i]) return {};
      drawn += outcome[i];
      ways *= binomial(spec.counts[i], outcome[i]);
    }
    if (drawn != spec.n) return {};
    return Rational(ways, binomial(spec.population, spec.n));
  }
  if (spec.kind == DistributionKind::kMultinomial) {
    if (outcome.size() != spec.probs.size()) {
      throw Error(ErrorCode::kInvalidParameters, "outcome dimension mismatch");
    }
    std::vector<unsigned> parts;
    Rational weight(1);
    long total = 0;
    for (std::size_t i = 0; i < outcome.size(); ++i) {
      if (outcome[i] < 0) return {};
      total += outcome[i];
      parts.push_back(static_cast<unsigned>(outcome[i]));
      weight *= spec.probs[i].pow(static_cast<unsigned>(outcome[i]));
    }
    if (total != spec.n) return {};
    return Rational(multinomial(static_cast<unsigned>(spec.n), parts)) * weight;
  }
  if (outcome.size() != 1) throw Error(ErrorCode::kInvalidParameters, "univariate distribution");
  return pmf(spec, outcome[0]);
}

Approx poisson_pmf(const DistributionSpec& spec, long k, int digits) {
  if (spec.kind != DistributionKind::kPoisson) {
    throw Error(ErrorCode::kInvalidParameters, "poisson_pmf requires a poisson spec");
  }
  if (k < 0) return Approx{Rational(), true, digits};
  // e^-m * m^k / k!, with the exponential carried to extra digits so the
  // product keeps `digits` correct places.
  const Rational factor = spec.p.pow(static_cast<unsigned>(k)) / Rational(factorial(static_cast<unsigned>(k)));
  const BigInt whole = factor.numerator() / factor.denominator();
  const int guard = 10 + static_cast<int>(whole.get_str().size());
  const Approx e = exp_approx(-spec.p, digits + guard);
  const Rational product = e.value * factor;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const mpz_class truncated = product.mpq().get_num() * scale / product.mpq().get_den();
  return Approx{Rational(truncated, scale), false, digits};
}

Rational mean(const DistributionSpec& spec) {
  switch (spec.kind) {
    case DistributionKind::kBinomial: return Rational(spec.n) * spec.p;
    case DistributionKind::kHypergeometric:
      if (spec.population == 0) return {};
      return Rational(spec.n * spec.successes, spec.population);
    case DistributionKind::kGeometric: return spec.p.reciprocal();
    case DistributionKind::kNegativeBinomial: return Rational(spec.successes) / spec.p;
    case DistributionKind::kPoisson: return spec.p;
    default: throw Error(ErrorCode::kInvalidParameters, "mean: univariate kinds only");
  }
}

}  // namespace house_edge
