// Copyright 2026 The cutgen authors
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

#ifndef CUTGEN_RATIONAL_HPP_
#define CUTGEN_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cutgen {

using Integer = mpz_class;

// Arbitrary-precision rational, always kept in canonical form
// (denominator > 0, gcd(|num|, den) = 1).  All arithmetic is exact;
// construction from floating point is deliberately not provided.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(static_cast<long>(n)) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d) : v_(n, d) { require_nonzero_den(); v_.canonicalize(); }
  Rational(const Integer& n, const Integer& d) : v_(n, d) {
    require_nonzero_den();
    v_.canonicalize();
  }
  explicit Rational(const Integer& n) : v_(n) {}
  explicit Rational(const mpq_class& q) : v_(q) { require_nonzero_den(); v_.canonicalize(); }

  Rational(double) = delete;
  Rational(float) = delete;

  // Parses "p", "-p" or "p/q" with decimal digits and positive q.
  static Rational parse(std::string_view text);

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const { Rational r; r.v_ = ::abs(v_); return r; }

  // Largest integer <= *this.
  Integer floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }

  // Fractional part in [0, 1); exact periodic reduction.
  Rational mod1() const {
    Rational r;
    r.v_ = v_ - mpq_class(floor());
    return r;
  }

  std::string to_string() const { return v_.get_str(); }

  const mpq_class& raw() const { return v_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r; r.v_ = a.v_ + b.v_; return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r; r.v_ = a.v_ - b.v_; return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r; r.v_ = a.v_ * b.v_; return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    Rational r; r.v_ = a.v_ / b.v_; return r;
  }
  Rational operator-() const { Rational r; r.v_ = -v_; return r; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  void require_nonzero_den() {
    if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  }

  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// lcm(a, b) for positive integers.
Integer lcm(const Integer& a, const Integer& b);

}  // namespace cutgen

#endif  // CUTGEN_RATIONAL_HPP_
