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

#ifndef HOUSE_EDGE_RATIONAL_HPP_
#define HOUSE_EDGE_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <type_traits>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace house_edge {

using BigInt = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
// Thin value type over GMP's mpq_class; every probability and expectation in
// the library is one of these.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T n) {  // NOLINT: implicit by design of a numeric type
    if constexpr (std::is_signed_v<T>) {
      q_ = mpq_class(static_cast<long>(n));
    } else {
      q_ = mpq_class(static_cast<unsigned long>(n));
    }
  }
  Rational(long long num, long long den);
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const BigInt& n) : q_(n) {}
  explicit Rational(mpq_class q);

  // Accepts "p/q", integers, and finite decimals such as "0.6" or "-1.25".
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& mpq() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational abs() const;
  Rational reciprocal() const;
  Rational pow(unsigned exponent) const;

  // Canonical "p/q" form; "/q" is omitted when q = 1.
  std::string str() const;
  // Fixed-point rendering with `digits` places after the point, rounding
  // half to even.
  std::string decimal(int digits = 7) const;
  double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

// Approximate value produced where exactness is impossible (square roots,
// exponentials). `value` is within 10^-digits of the true quantity; `exact`
// is set when no truncation happened.
struct Approx {
  Rational value;
  bool exact = false;
  int digits = 50;

  std::string decimal(int shown) const { return value.decimal(shown); }
};

// sqrt(x) truncated to `digits` decimal places (exact for perfect squares).
Approx sqrt_approx(const Rational& x, int digits = 50);

// exp(x) to `digits` decimal places via the alternating/positive Taylor series
// with an explicit remainder bound.
Approx exp_approx(const Rational& x, int digits = 50);

// Natural logarithm to long double precision; used only for reporting.
long double log_ld(const Rational& x);

}  // namespace house_edge

#endif  // HOUSE_EDGE_RATIONAL_HPP_
