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

#include "house_edge/rational.hpp"

#include <cmath>
#include <utility>

#include "house_edge/error.hpp"

namespace house_edge {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParameters: return "InvalidParameters";
    case ErrorCode::kPartsMismatch: return "PartsMismatch";
    case ErrorCode::kInvalidProbability: return "InvalidProbability";
    case ErrorCode::kDegeneratePushOnly: return "DegeneratePushOnly";
    case ErrorCode::kCoherentSystem: return "CoherentSystem";
    case ErrorCode::kIllegalSubset: return "IllegalSubset";
    case ErrorCode::kInvalidPoint: return "InvalidPoint";
    case ErrorCode::kInvalidPaytable: return "InvalidPaytable";
    case ErrorCode::kInvalidTicket: return "InvalidTicket";
    case ErrorCode::kInvalidWayTicket: return "InvalidWayTicket";
    case ErrorCode::kNoWinners: return "NoWinners";
    case ErrorCode::kDuplicateCard: return "DuplicateCard";
    case ErrorCode::kInvalidSignature: return "InvalidSignature";
    case ErrorCode::kInvalidTotal: return "InvalidTotal";
    case ErrorCode::kUnreachableState: return "UnreachableState";
    case ErrorCode::kInvalidCommission: return "InvalidCommission";
    case ErrorCode::kUnsolvedGame: return "UnsolvedGame";
    case ErrorCode::kDegenerateGame: return "DegenerateGame";
    case ErrorCode::kInconsistentDeck: return "InconsistentDeck";
    case ErrorCode::kIllegalAction: return "IllegalAction";
    case ErrorCode::kSystemStopped: return "SystemStopped";
    case ErrorCode::kLimitExceeded: return "LimitExceeded";
    case ErrorCode::kNonDyadicInput: return "NonDyadicInput";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Error";
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw Error(ErrorCode::kInvalidParameters, "zero denominator");
  q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q_.canonicalize();
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::kInvalidParameters, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::kParse, "empty number");
  try {
    if (const auto slash = s.find('/'); slash != std::string::npos) {
      BigInt num(s.substr(0, slash), 10);
      BigInt den(s.substr(slash + 1), 10);
      return Rational(num, den);
    }
    std::size_t start = 0;
    bool negative = false;
    if (s[0] == '-' || s[0] == '+') {
      negative = s[0] == '-';
      start = 1;
    }
    std::string mantissa = s.substr(start);
    long exponent = 0;
    if (const auto e = mantissa.find_first_of("eE"); e != std::string::npos) {
      exponent = std::stol(mantissa.substr(e + 1));
      mantissa = mantissa.substr(0, e);
    }
    std::string digits = mantissa;
    if (const auto dot = mantissa.find('.'); dot != std::string::npos) {
      digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
      exponent -= static_cast<long>(mantissa.size() - dot - 1);
    }
    if (digits.empty()) throw Error(ErrorCode::kParse, "malformed number '" + s + "'");
    for (char c : digits) {
      if (c < '0' || c > '9') throw Error(ErrorCode::kParse, "malformed number '" + s + "'");
    }
    BigInt num(digits, 10);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational r = exponent < 0 ? Rational(num, scale) : Rational(BigInt(num * scale));
    return negative ? -r : r;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::kParse, "malformed number '" + s + "'");
  }
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorCode::kInvalidParameters, "reciprocal of zero");
  return Rational(mpq_class(1 / q_));
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), exponent);
  mpq_class out(num, den);
  out.canonicalize();
  return Rational(std::move(out));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::kInvalidParameters, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
  if (digits < 0) digits = 0;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const mpz_class num = ::abs(q_.get_num()) * scale;
  const mpz_class& den = q_.get_den();
  mpz_class quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const int half = cmp(2 * rem, den);
  if (half > 0 || (half == 0 && mpz_odd_p(quot.get_mpz_t()))) quot += 1;
  std::string body = quot.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  const bool negative = sign() < 0 && quot != 0;
  return negative ? "-" + body : body;
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

namespace {

mpz_class pow10(int digits) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return out;
}

}  // namespace

Approx sqrt_approx(const Rational& x, int digits) {
  if (x.sign() < 0) throw Error(ErrorCode::kInvalidParameters, "square root of a negative number");
  mpz_class num_root, den_root;
  const bool num_square = mpz_perfect_square_p(x.mpq().get_num_mpz_t()) != 0;
  const bool den_square = mpz_perfect_square_p(x.mpq().get_den_mpz_t()) != 0;
  if (num_square && den_square) {
    mpz_sqrt(num_root.get_mpz_t(), x.mpq().get_num_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), x.mpq().get_den_mpz_t());
    return Approx{Rational(num_root, den_root), true, digits};
  }
  // floor(sqrt(x * 10^(2d))) / 10^d
  const mpz_class scale = pow10(digits);
  const mpz_class scaled = x.mpq().get_num() * scale * scale / x.mpq().get_den();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  return Approx{Rational(root, scale), false, digits};
}

Approx exp_approx(const Rational& x, int digits) {
  if (x.is_zero()) return Approx{Rational(1), true, digits};
  if (x.sign() < 0) {
    // e^-a = 1 / e^a; the reciprocal needs extra working digits.
    const Approx pos = exp_approx(-x, digits + 10 + static_cast<int>(x.abs().to_double() / 2.3) + 1);
    const Rational inv = pos.value.reciprocal();
    const mpz_class scale = pow10(digits);
    const mpz_class truncated = inv.mpq().get_num() * scale / inv.mpq().get_den();
    return Approx{Rational(truncated, scale), false, digits};
  }
  // Positive series; after n > 2x every remaining term is at most half the
  // previous one, so the tail is bounded by the last term added.
  const Rational eps = Rational(BigInt(1), pow10(digits + 5));
  Rational sum(1);
  Rational term(1);
  for (unsigned n = 1;; ++n) {
    term = term * x / Rational(n);
    sum += term;
    if (Rational(n) > 2 * x && term < eps) break;
  }
  const mpz_class scale = pow10(digits);
  const mpz_class truncated = sum.mpq().get_num() * scale / sum.mpq().get_den();
  return Approx{Rational(truncated, scale), false, digits};
}

long double log_ld(const Rational& x) {
  // Split off powers of two so huge numerators/denominators do not overflow.
  long num_exp = 0, den_exp = 0;
  const double num_mant = mpz_get_d_2exp(&num_exp, x.mpq().get_num_mpz_t());
  const double den_mant = mpz_get_d_2exp(&den_exp, x.mpq().get_den_mpz_t());
  return std::log(static_cast<long double>(num_mant)) - std::log(static_cast<long double>(den_mant)) +
         static_cast<long double>(num_exp - den_exp) * std::log(2.0L);
}

}  // namespace house_edge
