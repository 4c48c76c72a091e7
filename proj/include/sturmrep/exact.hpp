// Copyright 2026 The sturmrep Authors
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

// Exact arithmetic substrate: big integers, rationals and elements of real
// quadratic fields (a + b*sqrt(D))/c, with exact sign, floor and certified
// decimal enclosures.

#ifndef STURMREP_EXACT_HPP_
#define STURMREP_EXACT_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace sturmrep {

using Integer = mpz_class;
using Rational = mpq_class;

class FieldMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a cross-field comparison cannot be separated within the
// configured precision cap.
class Undecided : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Integer floor_div(const Integer& num, const Integer& den);
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);
Integer pow10(unsigned digits);
std::optional<std::int64_t> to_int64(const Integer& n);

// Element (a + b*sqrt(D))/c of Q(sqrt(D)).
//
// Representation after construction: c > 0, gcd(a, b, c) = 1, and D > 1 is
// stripped of every square factor found by trial division over the primes
// below 2^16 (plus a perfect-square test of the cofactor). When b = 0 the
// value is rational and D is stored as 1. Two elements live in the same
// field iff D1*D2 is a perfect square; arithmetic rebases operands when
// their stored radicands differ but the fields agree.
class QuadExt {
 public:
  QuadExt() : a_(0), b_(0), c_(1), d_(1) {}
  QuadExt(long v) : a_(v), b_(0), c_(1), d_(1) {}  // NOLINT
  QuadExt(const Integer& v) : a_(v), b_(0), c_(1), d_(1) {}  // NOLINT
  QuadExt(const Rational& q);  // NOLINT
  QuadExt(Integer a, Integer b, Integer c, Integer d);

  // sqrt(d) for d > 0.
  static QuadExt sqrt(const Integer& d);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& radicand() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  Rational to_rational() const;  // pre: is_rational()

  QuadExt conjugate() const;
  QuadExt reciprocal() const;
  QuadExt pow(unsigned e) const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& y);
  QuadExt& operator-=(const QuadExt& y);
  QuadExt& operator*=(const QuadExt& y);
  QuadExt& operator/=(const QuadExt& y);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

  // Exact value equality; elements of different fields with b != 0 are
  // never equal.
  friend bool operator==(const QuadExt& x, const QuadExt& y);
  // Exact ordering; throws FieldMismatch across fields.
  friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y);

  // "(a + b*sqrt(D))/c", "a/c" or "a".
  std::string to_string() const;

  // True when both are rational or share a field.
  static bool same_field(const QuadExt& x, const QuadExt& y);

 private:
  struct Reduced {};
  QuadExt(Integer a, Integer b, Integer c, Integer d, Reduced);
  void normalize();
  // Returns y expressed over this->d_ (pre: same field, both irrational).
  QuadExt rebased(const QuadExt& y) const;

  Integer a_, b_, c_, d_;
};

// sign(x) in {-1, 0, 1}.
int sign(const QuadExt& x);
Integer floor(const QuadExt& x);
Integer ceil(const QuadExt& x);
QuadExt abs(const QuadExt& x);

// Certified enclosure lo/10^digits <= x <= hi/10^digits.
struct Decimal {
  Integer lo;
  Integer hi;
  unsigned digits = 0;

  bool exact() const { return lo == hi; }
  // Truncated toward -infinity, with exactly `digits` fractional digits.
  std::string lower_string() const;
  std::string upper_string() const;
  // Width in units of 10^-digits.
  Integer width() const { return hi - lo; }
};

Decimal to_decimal(const QuadExt& x, unsigned digits);

// Decimal string of x with `digits` fractional digits, rounded to nearest
// (round-half-even on exact ties, which only rationals can produce).
std::string format_decimal(const QuadExt& x, unsigned digits);
std::string format_decimal(const Rational& x, unsigned digits);

struct CompareOptions {
  unsigned start_digits = 60;
  unsigned cap_digits = 240;
};

// Ordering that also works across fields: exact when the fields agree,
// otherwise by separating certified decimal enclosures with doubling
// precision. Throws Undecided past the cap.
std::strong_ordering compare_certified(const QuadExt& x, const QuadExt& y,
                                       CompareOptions opts = {});

// |x - y| < tol, decided exactly in-field or via enclosures across fields.
bool within(const QuadExt& x, const QuadExt& y, const Rational& tol,
            unsigned digits = 80);

}  // namespace sturmrep

#endif  // STURMREP_EXACT_HPP_
