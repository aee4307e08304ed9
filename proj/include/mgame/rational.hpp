// Copyright 2026 The mgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MGAME_RATIONAL_HPP_
#define MGAME_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mgame {

// Exact rational number, always kept in lowest terms with a positive
// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT: implicit from integers
  Rational(int n) : value_(n) {}   // NOLINT
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }
  explicit Rational(mpq_class&& q) : value_(std::move(q)) {
    value_.canonicalize();
  }

  // Parses "p/q" or "p". Throws std::invalid_argument on malformed input or a
  // zero denominator.
  static Rational parse(std::string_view text);

  // Canonical "p/q" form; integers are rendered "p/1".
  std::string str() const;
  // Approximate decimal, for human-readable annotations only.
  double approx() const { return value_.get_d(); }

  const mpq_class& raw() const { return value_; }
  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational floor() const;
  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational inverse() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    return Rational(mpq_class(-a.value_));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

// 2^-k.
Rational pow2_neg(unsigned k);
// base^k for k >= 0.
Rational pow(const Rational& base, unsigned k);

// The unique rational with the smallest denominator in the open interval
// (lo, hi), found by Stern-Brocot descent. Among candidates sharing that
// denominator the smaller numerator wins. Requires lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace mgame

template <>
struct std::hash<mgame::Rational> {
  std::size_t operator()(const mgame::Rational& r) const { return r.hash(); }
};

#endif  // MGAME_RATIONAL_HPP_
