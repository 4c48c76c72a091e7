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

#include "sturmrep/repetition.hpp"

using namespace sturmrep;

namespace {

BinaryWord bits(const char* s) { return BinaryWord::from_string(s); }

BinaryWord alternating(std::size_t len) {
  BinaryWord w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<int>(i % 2));
  return w;
}

BinaryWord slope_word(const char* cf, Rational rho, std::size_t len) {
  return sturmian_word(cf_value(ContinuedFraction::parse(cf)), rho, len, DigitMode::floor);
}

Rational ratio(std::uint64_t num, std::size_t den) {
  Rational q(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("worked example") {
  const auto x = bits("01001001");
  for (const auto& p : {r_profile_oracle(x, 4), r_profile_fast(x, 4)}) {
    CHECK(*p.at(1) == 3);
    CHECK(*p.at(2) == 5);
    CHECK(*p.at(3) == 6);
    CHECK(*p.at(4) == 7);
  }
  CHECK(*r_profile_oracle(bits("010"), 1).at(1) == 3);
}

TEST_CASE("unresolved entries stay absent") {
  const auto p = r_profile_fast(bits("0110"), 3);
  CHECK(*p.at(1) == 3);
  CHECK_FALSE(p.at(2).has_value());
  CHECK_FALSE(p.at(3).has_value());
  CHECK(p == r_profile_oracle(bits("0110"), 3));
}

TEST_CASE("alternating word") {
  const auto x = alternating(60);
  const auto p = r_profile_oracle(x, 20);
  for (std::size_t n = 1; n <= 20; ++n) CHECK(*p.at(n) == n + 2);
  CHECK(p == r_profile_fast(x, 20));

  const auto q = r_profile_fast(alternating(700), 300);
  const auto est = rep_estimate(q);
  CHECK(est.window_min < Rational(101, 100));
  CHECK(est.window_min == Rational(151, 150));
  CHECK(est.argmin_n == 300);

  const auto rep = sturmian_check(q);
  CHECK(rep.ok());
  CHECK(rep.hits == std::vector<std::size_t>{1});
  REQUIRE(rep.periodic_from.has_value());
  CHECK(*rep.periodic_from == 2);
}

TEST_CASE("engines agree on random words") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::size_t> len(1, 512);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> style(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    BinaryWord w;
    const std::size_t n = len(rng);
    const int s = style(rng);
    for (std::size_t i = 0; i < n; ++i) {
      // Mix fair coins, sparse words and near-periodic words.
      if (s == 0) w.push_back(coin(rng));
      else if (s == 1) w.push_back(rng() % 7 == 0);
      else w.push_back(i % 5 == 0 ? static_cast<int>(rng() % 10 == 0) : static_cast<int>(i % 2));
    }
    const std::size_t n_max = (n + 1) / 2;
    const auto fast = r_profile_fast(w, n_max);
    CHECK(fast == r_profile_oracle(w, n_max));
    const auto s_len = repeated_suffix_lengths(w);
    for (std::size_t m = 1; m < s_len.size(); ++m) CHECK(s_len[m] <= s_len[m - 1] + 1);
    for (std::size_t k = 1; k <= n_max; ++k) {
      if (!fast.at(k)) continue;
      CHECK(*fast.at(k) >= k + 1);
      if (k < n_max && fast.at(k + 1)) CHECK(*fast.at(k + 1) >= *fast.at(k) + 1);
    }
    CHECK(complexity_check(w, fast).empty());
  }
}

TEST_CASE("engines agree on a long Sturmian prefix") {
  const auto x = slope_word("0;(1,2,1,3)", Rational(1, 4), 4096);
  CHECK(r_profile_fast(x, 2047) == r_profile_oracle(x, 2047));
}

TEST_CASE("Sturmian profile laws") {
  const auto x = slope_word("0;(2,1,1)", Rational(1, 3), 4002);
  const auto p = r_profile_fast(x, 2000);
  const auto rep = sturmian_check(p);
  CHECK(rep.ok());
  CHECK(rep.checked == 2000);
  CHECK(rep.hits.size() >= 10);
  // On a finite prefix the periodicity test can only start after the last hit.
  REQUIRE(rep.periodic_from.has_value());
  CHECK(*rep.periodic_from == rep.hits.back() + 1);
  CHECK(complexity_check(x, p).empty());

  // After each hit the ratio decreases strictly while steps are +1.
  for (std::size_t h : rep.hits) {
    for (std::size_t n = h; n + 1 <= 2000 && *p.at(n + 1) == *p.at(n) + 1; ++n) {
      CHECK(ratio(*p.at(n + 1), n + 1) < ratio(*p.at(n), n));
    }
  }

  Rational best(0);
  for (std::size_t n = 1000; n <= 2000; ++n) {
    const Rational v = ratio(*p.at(n), n);
    if (v > best) best = v;
  }
  CHECK(best > Rational(199, 100));

  const auto est = rep_estimate(p);
  CHECK(est.n_lo == 1000);
  CHECK(est.n_hi == 2000);
  CHECK(est.window_min >= 1 + Rational(1, 2000));
  CHECK(est.window_min <= 2 + Rational(1, 1000));
  CHECK_FALSE(est.record_lows.empty());
  for (const auto& low : est.record_lows) CHECK(*p.at(low.n + 1) > *p.at(low.n) + 1);
}

TEST_CASE("estimate argument checks") {
  const auto p = r_profile_fast(alternating(40), 10);
  CHECK_THROWS(rep_estimate(p, Rational(0)));
  CHECK_THROWS(rep_estimate(p, Rational(1)));
  const auto sparse = r_profile_fast(bits("0110"), 3);
  CHECK_THROWS(rep_estimate(sparse, Rational(1, 2)));
}

TEST_CASE("irrationality exponent") {
  CHECK(irrationality_exponent(QuadExt(2L)).value == QuadExt(2L));
  CHECK(irrationality_exponent(QuadExt(1L)).infinite);
  CHECK_THROWS(irrationality_exponent(QuadExt(Rational(1, 2))));
  const QuadExt rmax(Integer(-3), Integer(2), Integer(2), Integer(10));
  const auto mu = irrationality_exponent(rmax);
  CHECK_FALSE(mu.infinite);
  const QuadExt s10 = QuadExt::sqrt(Integer(10));
  CHECK(mu.value == (QuadExt(-3L) + QuadExt(2L) * s10) / (QuadExt(-5L) + QuadExt(2L) * s10));
}

TEST_CASE("lower bounds on a case-2 word") {
  const auto cf = ContinuedFraction::parse("0;(2,1,1,2,1,1,1)");
  const auto conv = convergents(cf, 10);
  const std::size_t len = 2 * (conv[10].q.get_ui() + conv[9].q.get_ui()) + 2;
  const auto x = case2_word(cf, len);
  const auto report = lower_bound_check(x, cf, 4, 9);
  CHECK(report.ok());
  REQUIRE(report.levels.size() == 6);
  for (const auto& level : report.levels) {
    CHECK(level.case2);
    CHECK(level.checked > 0);
    CHECK(level.note.empty());
    CHECK(level.upper1_holds);
    CHECK(level.upper2_holds);
  }
}

TEST_CASE("lower bound checker skips other cases") {
  const auto cf = ContinuedFraction::parse("0;(2,1,1)");
  const auto x = characteristic_word(cf, classify_min_length(cf, 6) + 200);
  const auto report = lower_bound_check(x, cf, 2, 6);
  for (const auto& level : report.levels) {
    if (!level.case2) CHECK(level.note.rfind("skipped", 0) == 0);
  }
}
