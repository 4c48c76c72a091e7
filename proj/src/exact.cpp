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

#include "sturmrep/exact.hpp"

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

namespace sturmrep {

namespace {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long kLimit = 1ul << 16;
    std::vector<bool> composite(kLimit, false);
    std::vector<unsigned long> out;
    for (unsigned long p = 2; p < kLimit; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (unsigned long q = p * p; q < kLimit; q += p) composite[q] = true;
    }
    return out;
  }();
  return primes;
}

int sgn(const Integer& v) {
  const int s = ::sgn(v);
  return (s > 0) - (s < 0);
}

std::string fixed_point(const Integer& scaled, unsigned digits) {
  Integer mag = ::abs(scaled);
  std::string s = mag.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (scaled < 0) s.insert(0, "-");
  return s;
}

}  // namespace

Integer floor_div(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("floor_div by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer pow10(unsigned digits) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, digits);
  return r;
}

std::optional<std::int64_t> to_int64(const Integer& n) {
  if (!mpz_fits_slong_p(n.get_mpz_t())) return std::nullopt;
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return static_cast<std::int64_t>(n.get_si());
}

// ---------------------------------------------------------------------------

QuadExt::QuadExt(const Rational& q)
    : a_(q.get_num()), b_(0), c_(q.get_den()), d_(1) {}

QuadExt::QuadExt(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (d_ <= 0) throw std::invalid_argument("QuadExt radicand must be positive");
  if (b_ != 0) {
    Integer scale = 1;
    for (unsigned long p : small_primes()) {
      const unsigned long p2 = p * p;
      if (d_ < p2) break;
      while (mpz_divisible_ui_p(d_.get_mpz_t(), p2)) {
        mpz_divexact_ui(d_.get_mpz_t(), d_.get_mpz_t(), p2);
        scale *= p;
      }
    }
    if (is_perfect_square(d_)) {
      scale *= isqrt(d_);
      d_ = 1;
    }
    b_ *= scale;
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
    }
  }
  normalize();
}

QuadExt::QuadExt(Integer a, Integer b, Integer c, Integer d, Reduced)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  normalize();
}

QuadExt QuadExt::sqrt(const Integer& d) { return QuadExt(0, 1, 1, d); }

void QuadExt::normalize() {
  if (c_ == 0) throw DivisionByZero("QuadExt with zero denominator");
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  if (b_ == 0) d_ = 1;
  Integer g;
  mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(a_.get_mpz_t(), a_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b_.get_mpz_t(), b_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(c_.get_mpz_t(), c_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational QuadExt::to_rational() const {
  if (!is_rational()) throw std::domain_error("QuadExt is irrational");
  Rational q(a_, c_);
  q.canonicalize();
  return q;
}

bool QuadExt::same_field(const QuadExt& x, const QuadExt& y) {
  if (x.is_rational() || y.is_rational()) return true;
  if (x.d_ == y.d_) return true;
  return is_perfect_square(Integer(x.d_ * y.d_));
}

QuadExt QuadExt::rebased(const QuadExt& y) const {
  if (y.d_ == d_) return y;
  const Integer s = isqrt(Integer(d_ * y.d_));
  return QuadExt(y.a_ * d_, y.b_ * s, y.c_ * d_, d_, Reduced{});
}

QuadExt QuadExt::conjugate() const { return QuadExt(a_, -b_, c_, d_, Reduced{}); }

QuadExt QuadExt::reciprocal() const {
  if (is_zero()) throw DivisionByZero("reciprocal of zero");
  Integer norm = a_ * a_ - b_ * b_ * d_;
  return QuadExt(c_ * a_, -(c_ * b_), std::move(norm), d_, Reduced{});
}

QuadExt QuadExt::pow(unsigned e) const {
  QuadExt result(1L);
  QuadExt base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

QuadExt QuadExt::operator-() const { return QuadExt(-a_, -b_, c_, d_, Reduced{}); }

QuadExt& QuadExt::operator+=(const QuadExt& y0) {
  if (y0.is_zero()) return *this;
  if (!same_field(*this, y0)) throw FieldMismatch("addition across quadratic fields");
  const QuadExt y = (is_rational() || y0.is_rational()) ? y0 : rebased(y0);
  const Integer& d = is_rational() ? y.d_ : d_;
  *this = QuadExt(a_ * y.c_ + y.a_ * c_, b_ * y.c_ + y.b_ * c_, c_ * y.c_, d, Reduced{});
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& y) { return *this += -y; }

QuadExt& QuadExt::operator*=(const QuadExt& y0) {
  if (!same_field(*this, y0)) throw FieldMismatch("multiplication across quadratic fields");
  const QuadExt y = (is_rational() || y0.is_rational()) ? y0 : rebased(y0);
  const Integer d = is_rational() ? y.d_ : d_;
  *this = QuadExt(a_ * y.a_ + b_ * y.b_ * d, a_ * y.b_ + b_ * y.a_, c_ * y.c_, d, Reduced{});
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& y) {
  if (y.is_zero()) throw DivisionByZero("division by zero");
  if (!same_field(*this, y)) throw FieldMismatch("division across quadratic fields");
  return *this *= y.reciprocal();
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  if (x.is_rational() != y.is_rational()) return false;
  if (x.is_rational()) return x.a_ == y.a_ && x.c_ == y.c_;
  if (!QuadExt::same_field(x, y)) return false;
  const QuadExt yy = x.rebased(y);
  QuadExt diff = x;
  diff -= yy;
  return diff.is_zero();
}

std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
  if (!QuadExt::same_field(x, y)) throw FieldMismatch("comparison across quadratic fields");
  const int s = sign(x - y);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string QuadExt::to_string() const {
  if (is_rational()) {
    if (c_ == 1) return a_.get_str();
    return a_.get_str() + "/" + c_.get_str();
  }
  std::string root = "sqrt(" + d_.get_str() + ")";
  const Integer mag = ::abs(b_);
  std::string term = (mag == 1) ? root : mag.get_str() + "*" + root;
  std::string num;
  bool compound = false;
  if (a_ == 0) {
    num = (b_ < 0 ? "-" : "") + term;
  } else {
    num = a_.get_str() + (b_ < 0 ? " - " : " + ") + term;
    compound = true;
  }
  if (c_ == 1) return num;
  if (compound) num = "(" + num + ")";
  return num + "/" + c_.get_str();
}

// ---------------------------------------------------------------------------

int sign(const QuadExt& x) {
  const int sa = sgn(x.a());
  const int sb = sgn(x.b());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 D.
  const int cmp_sq = sgn(Integer(x.a() * x.a() - x.b() * x.b() * x.radicand()));
  return sa > 0 ? cmp_sq : -cmp_sq;
}

Integer floor(const QuadExt& x) {
  if (x.is_rational()) return floor_div(x.a(), x.c());
  // b*sqrt(D) lies strictly between consecutive integers n and n+1, and no
  // multiple of c lies in (n, n+1), so floor((a + b sqrt D)/c) = floor(n/c).
  const Integer r = isqrt(Integer(x.b() * x.b() * x.radicand()));
  const Integer n = x.b() > 0 ? Integer(x.a() + r) : Integer(x.a() - r - 1);
  return floor_div(n, x.c());
}

Integer ceil(const QuadExt& x) { return -floor(-x); }

QuadExt abs(const QuadExt& x) { return sign(x) < 0 ? -x : x; }

std::string Decimal::lower_string() const { return fixed_point(lo, digits); }
std::string Decimal::upper_string() const { return fixed_point(hi, digits); }

Decimal to_decimal(const QuadExt& x, unsigned digits) {
  const QuadExt scaled = x * QuadExt(pow10(digits));
  return Decimal{floor(scaled), ceil(scaled), digits};
}

std::string format_decimal(const QuadExt& x, unsigned digits) {
  if (x.is_rational()) return format_decimal(x.to_rational(), digits);
  const QuadExt scaled = x * QuadExt(pow10(digits)) + QuadExt(Rational(1, 2));
  return fixed_point(floor(scaled), digits);
}

std::string format_decimal(const Rational& x, unsigned digits) {
  const Integer num = x.get_num() * pow10(digits);
  const Integer& den = x.get_den();
  Integer q = floor_div(num, den);
  const Integer rem = num - q * den;
  const int cmp = sgn(Integer(2 * rem - den));
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
  return fixed_point(q, digits);
}

std::strong_ordering compare_certified(const QuadExt& x, const QuadExt& y,
                                       CompareOptions opts) {
  if (QuadExt::same_field(x, y)) return x <=> y;
  unsigned digits = opts.start_digits;
  while (true) {
    const Decimal dx = to_decimal(x, digits);
    const Decimal dy = to_decimal(y, digits);
    if (dx.hi < dy.lo) return std::strong_ordering::less;
    if (dx.lo > dy.hi) return std::strong_ordering::greater;
    if (digits >= opts.cap_digits) break;
    digits = std::min(2 * digits, opts.cap_digits);
  }
  throw Undecided("cross-field comparison undecided at " +
                  std::to_string(opts.cap_digits) + " digits");
}

bool within(const QuadExt& x, const QuadExt& y, const Rational& tol, unsigned digits) {
  if (QuadExt::same_field(x, y)) return abs(x - y) < QuadExt(tol);
  for (unsigned d = digits; d <= 8 * digits; d *= 2) {
    const Decimal dx = to_decimal(x, d);
    const Decimal dy = to_decimal(y, d);
    const Rational scale(pow10(d));
    const Rational limit = tol * scale;
    Integer upper = dx.hi - dy.lo;
    if (dy.hi - dx.lo > upper) upper = dy.hi - dx.lo;
    if (Rational(upper) < limit) return true;
    Integer lower = 0;
    if (dx.lo - dy.hi > lower) lower = dx.lo - dy.hi;
    if (dy.lo - dx.hi > lower) lower = dy.lo - dx.hi;
    if (Rational(lower) >= limit) return false;
  }
  throw Undecided("tolerance test undecided");
}

}  // namespace sturmrep
