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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sturmrep/exact.hpp"

using namespace sturmrep;

namespace {

QuadExt qx(long a, long b, long c, long d) { return QuadExt(Integer(a), Integer(b), Integer(c), Integer(d)); }

// Random (a + b sqrt D)/c with small coefficients in one of a few fields.
QuadExt random_element(std::mt19937_64& rng, long d) {
  std::uniform_int_distribution<long> coef(-50, 50), den(1, 30);
  return qx(coef(rng), coef(rng), den(rng), d);
}

}  // namespace

TEST_CASE("arithmetic identities") {
  const QuadExt x = qx(-2, 1, 2, 10);
  CHECK(x * (x + QuadExt(2L)) == QuadExt(Rational(3, 2)));
  CHECK(x + QuadExt() == x);
  const QuadExt rmax = QuadExt(QuadExt::sqrt(Integer(10))) - QuadExt(Rational(3, 2));
  CHECK(rmax.a() == -3);
  CHECK(rmax.b() == 2);
  CHECK(rmax.c() == 2);
  CHECK(rmax.radicand() == 10);
}

TEST_CASE("normalization") {
  const QuadExt y = qx(0, 1, 1, 40);
  CHECK(y.radicand() == 10);
  CHECK(y.b() == 2);
  const QuadExt z = qx(4, 6, 8, 10);
  CHECK(z.a() == 2);
  CHECK(z.b() == 3);
  CHECK(z.c() == 4);
  const QuadExt neg = qx(1, 1, -2, 5);
  CHECK(neg.c() == 2);
  CHECK(neg.a() == -1);
  CHECK(qx(3, 1, 1, 9) == QuadExt(6L));
  const QuadExt again(z.a(), z.b(), z.c(), z.radicand());
  CHECK(again.a() == z.a());
  CHECK(again.b() == z.b());
  CHECK(again.c() == z.c());
  CHECK(again.radicand() == z.radicand());
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(QuadExt::sqrt(Integer(2)) + QuadExt::sqrt(Integer(3)), FieldMismatch);
  CHECK_THROWS_AS(QuadExt(1L) / QuadExt(), DivisionByZero);
  CHECK_THROWS_AS((void)(QuadExt::sqrt(Integer(2)) < QuadExt::sqrt(Integer(3))), FieldMismatch);
  // sqrt 8 and sqrt 2 share a field.
  CHECK(QuadExt::sqrt(Integer(8)) == QuadExt(2L) * QuadExt::sqrt(Integer(2)));
}

TEST_CASE("ordering") {
  CHECK(qx(-2, 1, 2, 10) < QuadExt(Rational(3, 5)));
  const QuadExt x = qx(7, -3, 11, 13);
  CHECK((x <=> x) == std::strong_ordering::equal);
  const QuadExt r2 = qx(-2693, 415, 1438, 149);
  const QuadExt r1 = qx(48, 1, 31, 10);
  CHECK(compare_certified(r2, r1) == std::strong_ordering::less);
  CHECK(compare_certified(r1, r2) == std::strong_ordering::greater);
}

TEST_CASE("floor and ceiling") {
  CHECK(floor(QuadExt::sqrt(Integer(10))) == 3);
  CHECK(floor(qx(-2, 1, 3, 10)) == 0);
  CHECK(floor(QuadExt(2L) * qx(-2, 1, 3, 10) + QuadExt(Rational(1, 3))) == 1);
  CHECK(floor(qx(-7, 0, 2, 1)) == -4);
  CHECK(ceil(qx(-7, 0, 2, 1)) == -3);
  CHECK(ceil(QuadExt::sqrt(Integer(10))) == 4);
}

TEST_CASE("decimals") {
  const QuadExt rmax = qx(-3, 2, 2, 10);
  CHECK(to_decimal(rmax, 5).lower_string() == "1.66227");
  CHECK(to_decimal(qx(48, 1, 31, 10), 5).lower_string() == "1.65039");
  const Decimal half = to_decimal(QuadExt(Rational(3, 2)), 12);
  CHECK(half.exact());
  CHECK(half.lower_string() == "1.500000000000");
  const Decimal d = to_decimal(rmax, 40);
  CHECK(d.width() <= 1);
  CHECK(format_decimal(rmax, 9) == "1.662277660");
  // Half-even at an exact tie.
  CHECK(format_decimal(Rational(1, 8), 2) == "0.12");
  CHECK(format_decimal(Rational(3, 8), 2) == "0.38");
  CHECK(format_decimal(Rational(-1, 8), 2) == "-0.12");
  CHECK(within(rmax, qx(1662277660L, 0, 1000000000L, 1), Rational(1, 1000000000)));
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(20261014);
  for (long d : {2L, 10L, 149L, 3927L}) {
    for (int i = 0; i < 60; ++i) {
      const QuadExt x = random_element(rng, d), y = random_element(rng, d), z = random_element(rng, d);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      if (!x.is_zero()) CHECK(x * x.reciprocal() == QuadExt(1L));
      if (!y.is_zero()) CHECK((x / y) * y == x);
      CHECK(x - x == QuadExt());
      CHECK((x * x.conjugate()).is_rational());
    }
  }
}

TEST_CASE("floor of negation") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const QuadExt x = random_element(rng, 10);
    if (x.is_rational()) {
      const Rational r = x.to_rational();
      CHECK(floor(x) + floor(-x) == (r.get_den() == 1 ? 0 : -1));
    } else {
      CHECK(floor(x) + floor(-x) == -1);
      CHECK(QuadExt(floor(x)) < x);
      CHECK(x < QuadExt(Integer(floor(x) + 1)));
    }
  }
}

TEST_CASE("exact ordering agrees with 60-digit decimals") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    const long d = i % 2 == 0 ? 10 : 149;
    const QuadExt x = random_element(rng, d), y = random_element(rng, d);
    const auto exact = x <=> y;
    const Decimal dx = to_decimal(x, 60), dy = to_decimal(y, 60);
    if (exact == std::strong_ordering::less) CHECK(dx.lo <= dy.hi);
    if (exact == std::strong_ordering::greater) CHECK(dx.hi >= dy.lo);
    if (dx.hi < dy.lo) CHECK(exact == std::strong_ordering::less);
    if (dx.lo > dy.hi) CHECK(exact == std::strong_ordering::greater);
  }
}

TEST_CASE("certified comparison across and within fields") {
  CHECK(compare_certified(QuadExt::sqrt(Integer(2)), QuadExt::sqrt(Integer(3))) == std::strong_ordering::less);
  CHECK(compare_certified(QuadExt::sqrt(Integer(2)), QuadExt::sqrt(Integer(8)) / QuadExt(2L)) ==
        std::strong_ordering::equal);
}
