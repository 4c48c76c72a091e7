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

// Continued fractions [a0; a1, a2, ...] with an optional repeating tail.

#ifndef STURMREP_CONTFRAC_HPP_
#define STURMREP_CONTFRAC_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sturmrep/exact.hpp"
#include "sturmrep/mat2.hpp"

namespace sturmrep {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ContinuedFraction {
 public:
  ContinuedFraction() : a0_(0) {}
  // A finite expansion ending in 1 (with at least one quotient after a0) is
  // folded into its canonical form. The period is kept exactly as given.
  ContinuedFraction(Integer a0, std::vector<Integer> preperiod, std::vector<Integer> period = {});

  // Grammar: a0;d,d,...,(d,d,...) with whitespace ignored. The preperiod
  // and the parenthesized period are both optional.
  static ContinuedFraction parse(std::string_view text);

  const Integer& a0() const { return a0_; }
  const std::vector<Integer>& preperiod() const { return preperiod_; }
  const std::vector<Integer>& period() const { return period_; }
  bool is_periodic() const { return !period_.empty(); }

  // Number of partial quotients a1, a2, ... (nullopt when periodic).
  std::optional<std::size_t> length() const;
  // a_k, k >= 0. Throws std::out_of_range beyond a finite expansion.
  const Integer& quotient(std::size_t k) const;
  // a_1..a_n as a vector.
  std::vector<Integer> quotients(std::size_t n) const;

  std::string to_string() const;

 private:
  Integer a0_;
  std::vector<Integer> preperiod_;
  std::vector<Integer> period_;
};

struct ConvergentPair {
  Integer p_prev, q_prev;
  Integer p, q;
  std::size_t k = 0;
};

// (p_k, q_k) for k = 0..k_max with (p_-1, q_-1) = (1, 0).
std::vector<ConvergentPair> convergents(const ContinuedFraction& cf, std::size_t k_max);

// Value of a finite list [x0; x1, ..., xn].
Rational finite_value(std::span<const Integer> quotients);

IntMat2 quotient_product(std::span<const Integer> quotients);

// Exact value: rational for finite expansions, quadratic irrational for
// periodic ones.
QuadExt cf_value(const ContinuedFraction& cf);

// eta_k = q_{k-1}/q_k for k >= 1, self-checked against [0; a_k, ..., a_1].
Rational eta(const ContinuedFraction& cf, std::size_t k);

// Limit of eta_k along k = K + phase (mod L) for a slope whose tail after
// a_K repeats `period`: the purely periodic expansion starting at
// period[phase - 1] and reading the period backwards.
QuadExt eta_limit(std::span<const Integer> period, std::size_t phase);

// Expansion of an exact value by the floor/reciprocal loop. Periodicity is
// detected by an exact state repeat; at most max_steps steps are taken.
ContinuedFraction expand(const QuadExt& x, std::size_t max_steps = 10000);

std::vector<Integer> to_integers(std::span<const int> digits);

}  // namespace sturmrep

#endif  // STURMREP_CONTFRAC_HPP_
