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

#include "mgame/rational.hpp"

#include <ostream>

namespace mgame {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  const auto slash = s.find('/');
  auto check_int = [&](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) throw std::invalid_argument("malformed rational: " + s);
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9')
        throw std::invalid_argument("malformed rational: " + s);
    }
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  check_int(num);
  check_int(den);
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(value_.get_den(), value_.get_num()));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::size_t Rational::hash() const {
  std::hash<std::string> h;
  return h(value_.get_num().get_str(16)) * 31u ^ h(value_.get_den().get_str(16));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational pow2_neg(unsigned k) {
  mpz_class d = 1;
  d <<= k;
  return Rational(mpq_class(mpz_class(1), d));
}

Rational pow(const Rational& base, unsigned k) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), k);
  return Rational(mpq_class(n, d));
}

namespace {

// Simplest rational in (lo, hi) for 0 <= lo < hi; hi_inf marks hi = +inf.
mpq_class simplest_nonneg(const mpq_class& lo, const mpq_class& hi,
                          bool hi_inf) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  const mpq_class next(fl + 1);
  if (hi_inf || next < hi) return next;
  // lo and hi share the integer part fl (hi <= fl + 1).
  const mpq_class lo_frac = lo - fl;
  const mpq_class hi_frac = hi - fl;
  // x = fl + 1/y with y in (1/hi_frac, 1/lo_frac).
  const mpq_class new_lo = 1 / hi_frac;
  if (lo_frac == 0) {
    mpq_class y = simplest_nonneg(new_lo, new_lo, true);
    return fl + 1 / y;
  }
  const mpq_class new_hi = 1 / lo_frac;
  mpq_class y = simplest_nonneg(new_lo, new_hi, false);
  return fl + 1 / y;
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) {
    throw std::invalid_argument("simplest_between: empty interval (" +
                                lo.str() + ", " + hi.str() + ")");
  }
  if (lo.sign() < 0 && hi.sign() > 0) return Rational(0);
  if (hi.sign() <= 0) {
    return -simplest_between(-hi, -lo);
  }
  return Rational(simplest_nonneg(lo.raw(), hi.raw(), false));
}

}  // namespace mgame
