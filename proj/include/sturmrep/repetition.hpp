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

// The repetition function r(n, x): the length of the shortest prefix of x
// containing two (possibly overlapping) occurrences of a length-n factor.

#ifndef STURMREP_REPETITION_HPP_
#define STURMREP_REPETITION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sturmrep/contfrac.hpp"
#include "sturmrep/exact.hpp"
#include "sturmrep/words.hpp"

namespace sturmrep {

struct RepProfile {
  // r[n - 1] = r(n) for n = 1..n_max; nullopt when the prefix is too short.
  std::vector<std::optional<std::uint64_t>> r;
  std::size_t source_length = 0;

  std::size_t n_max() const { return r.size(); }
  const std::optional<std::uint64_t>& at(std::size_t n) const { return r.at(n - 1); }
  // n with r(n) = 2n + 1.
  std::vector<std::size_t> sturmian_hits() const;
  bool operator==(const RepProfile&) const = default;
};

// Direct scan of the definition, m ascending, every start i <= m - n.
RepProfile r_profile_oracle(const BinaryWord& x, std::size_t n_max);

// Online suffix automaton: s(m) = longest suffix of x_1..x_m occurring in
// x_1..x_{m-1}; r(n) = min{m : s(m) >= n}.
RepProfile r_profile_fast(const BinaryWord& x, std::size_t n_max);

// s(1..|x|) from the fast engine (exposed for property tests).
std::vector<std::size_t> repeated_suffix_lengths(const BinaryWord& x);

struct RecordLow {
  std::size_t n;
  Rational ratio;
};

struct RepEstimate {
  Rational window_min;
  std::size_t argmin_n = 0;
  std::vector<RecordLow> record_lows;
  std::size_t n_lo = 0;
  std::size_t n_hi = 0;
};

// Minimum of r(n)/n over resolved n in [ceil(f n_max), n_max]; record lows
// are the run ends r(n + 1) > r(n) + 1.
RepEstimate rep_estimate(const RepProfile& profile, const Rational& window_fraction = Rational(1, 2));

struct SturmianReport {
  std::size_t checked = 0;
  std::vector<std::size_t> hits;
  std::vector<std::string> violations;
  // Least n0 with r(n) <= 2n for every resolved n >= n0 (nullopt if r(n_max) > 2 n_max).
  std::optional<std::size_t> periodic_from;
  bool ok() const { return violations.empty(); }
};

// r(n) <= 2n + 1, n + 1 <= r(n), r(n + 1) >= r(n) + 1, and r(n) = r(n - 1) + 1
// whenever r(n) != 2n + 1.
SturmianReport sturmian_check(const RepProfile& profile);

// r(n) <= p(n) + n on the finite prefix, with p counted on x itself.
std::vector<std::string> complexity_check(const BinaryWord& x, const RepProfile& profile);

struct IrrationalityExponent {
  bool infinite = false;
  QuadExt value;
};

// rep / (rep - 1); infinite at rep = 1. Throws for rep < 1.
IrrationalityExponent irrationality_exponent(const QuadExt& rep);

struct LowerBoundLevel {
  std::size_t k = 0;
  bool case2 = false;
  std::string note;
  std::size_t checked = 0;
  std::vector<std::string> violations;
  // Upper bounds at the two anchor lengths, finite-k form with
  // eps_k = 2/q_k.
  bool upper1_holds = false;
  bool upper2_holds = false;
};

struct LowerBoundReport {
  std::vector<LowerBoundLevel> levels;
  bool ok() const;
};

// For k in [k_lo, k_hi] where x is in case 2:
//   r(n) >= n + q_k + q_{k-1}           for q_k + q_{k-1} - 1 <= n <= |W_k| + q_k + q_{k-1} - 2,
//   r(n) >= n + |W_k| + q_k + q_{k-1}   for |W_k| + q_k + q_{k-1} - 1 <= n <= q_{k+1} + q_k - 2,
// plus the upper bounds r(N)/N < B + 2/q_k at N = |W_k| + q_k + q_{k-1} - 2 and
// N = q_k + q_{k-1} - 2.
LowerBoundReport lower_bound_check(const BinaryWord& x, const ContinuedFraction& cf, std::size_t k_lo,
                                   std::size_t k_hi, const RepProfile* profile = nullptr);

}  // namespace sturmrep

#endif  // STURMREP_REPETITION_HPP_
