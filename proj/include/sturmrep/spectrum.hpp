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

// Exact computations around the repetition spectrum of Sturmian words:
// (t, eta) propagation, pattern-exclusion bounds, the e_j^(n)(m) family and
// its Lambda-sums, exact rep for case-2 words with periodic slopes, and the
// discriminants D_n.

#ifndef STURMREP_SPECTRUM_HPP_
#define STURMREP_SPECTRUM_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sturmrep/contfrac.hpp"
#include "sturmrep/exact.hpp"
#include "sturmrep/mat2.hpp"

namespace sturmrep {

namespace constants {
QuadExt phi();    // (1 + sqrt 5)/2
QuadExt r_max();  // sqrt 10 - 3/2
QuadExt r_1();    // (48 + sqrt 10)/31
QuadExt r_2();    // (415 sqrt 149 - 2693)/1438
QuadExt r_3();    // 2(1869 + 2 phi)/2277
}  // namespace constants

// ---------------------------------------------------------------------------
// (t, eta) state

struct BoundState {
  QuadExt t;
  QuadExt eta;
};

// Each digit a: eta' = 1/(a + eta), t' = eta' (t + eta).
BoundState propagate_state(BoundState s, std::span<const Integer> digits);

// 1 + (1 + eta)/(t + 1 + eta) and 1 + (t + eta)/(1 + eta), without eps_k.
QuadExt bound_B1(const BoundState& s);
QuadExt bound_B2(const BoundState& s);

enum class BoundMode { B2_then_B1, B1_then_B2 };
std::string to_string(BoundMode mode);

struct PatternBound {
  QuadExt value;  // bound at the worst endpoint
  QuadExt at_eta0;
  QuadExt at_eta1;
  int worst_eta = 0;  // 0 or 1
  int direction = 0;  // sign of d(bound)/d(eta) on [0, 1]
  // bound - 1 = (p eta + q)/(r eta + s) as a function of eta_{k-1}.
  QuadMat2 map;
};

class MonotonicityFailure : public std::runtime_error {
 public:
  MonotonicityFailure(QuadExt at0, QuadExt at1);
  const QuadExt& at_eta0() const { return at0_; }
  const QuadExt& at_eta1() const { return at1_; }

 private:
  QuadExt at0_, at1_;
};

// B2_then_B1: B2 > threshold at k - 1 gives t > (threshold - 1)(1 + eta) - eta;
// propagate `pattern`, then bound B1. B1_then_B2 is the mirror image with
// t < (1/(threshold - 1) - 1)(1 + eta). The bound is a Mobius function of
// eta_{k-1} whose monotonicity on [0, 1] is certified before the worse
// endpoint is taken.
PatternBound pattern_exclusion_bound(std::span<const Integer> pattern, const QuadExt& threshold, BoundMode mode);

// 1 + 279((-22 + 7 sqrt10) p^n + (22 + 7 sqrt10) q^n) /
//     (60 + 40 sqrt10 + 31(-304 + 97 sqrt10) p^n + 31(304 + 97 sqrt10) q^n),
// p = 3 - sqrt10, q = 3 + sqrt10.
QuadExt tail_family_bound(unsigned n);
// 1 + A/B with the eta_{k-1} terms kept, as a Mobius map of eta.
QuadMat2 tail_family_eta_map(unsigned n);
// Value of the q^n-dominant ratio, the n -> infinity limit.
QuadExt tail_family_limit();

// ---------------------------------------------------------------------------
// e_j^(n)(m)

// Integer generators: e_j(m + 1) = G_j * e_j(m).
IntMat2 e_generator(int j);

// Periods of e_0^(n)(m) (m <= n+1) and e_j^(n)(m), j = 1, 2 (m <= n), as
// purely periodic expansions [0; period].
std::vector<Integer> e_period(unsigned n, int j, std::size_t m);

struct ZetaXi {
  std::size_t phase = 0;  // i = 3m + j
  std::size_t m = 0;
  int j = 0;
  QuadExt e;       // e_j(m) = eta-limit at the phase
  QuadExt lambda;  // Lambda(E_j^{n,m})
  QuadExt nu;
  QuadExt t;  // lambda/(1 - nu)
  QuadExt zeta;
  QuadExt xi;
};

// All quantities for the slope family with period (2,1,1)^n, 2,1,1,1.
class Family {
 public:
  // Values e_j(m) for m <= depth (at least n + 1) via Mobius extension.
  explicit Family(unsigned n, std::size_t depth = 0);

  unsigned n() const { return n_; }
  std::size_t depth() const { return depth_; }
  const QuadExt& e(int j, std::size_t m) const;

  // sigma(m) = 1 + e2 + e2 e1, tau(m) = e2 e1 e0, gamma by the recurrence.
  QuadExt sigma(std::size_t m) const;
  QuadExt tau(std::size_t m) const;
  QuadExt gamma(std::size_t m) const;

  // tau_j(m), sigma_j(m) of the lambda recurrence; m >= 1.
  QuadExt tau_j(int j, std::size_t m) const;
  QuadExt sigma_j(int j, std::size_t m) const;
  // Closed product forms of nu_j.
  QuadExt nu_j(int j) const;

  // E_j^{n,m}: the 3n + 5 eta-limits read backwards from phase 3m + j.
  std::vector<QuadExt> e_sequence(int j, std::size_t m) const;
  // Sum of the last three prefix products of E_j^{n,m}.
  QuadExt chi(int j, std::size_t m) const;
  QuadExt lambda(int j, std::size_t m) const;

  std::size_t phase_count() const { return 3 * n_ + 4; }
  ZetaXi zeta_xi(std::size_t i) const;

 private:
  unsigned n_;
  std::size_t depth_;
  std::array<std::vector<QuadExt>, 3> e_;
};

// Lambda(c) = c1 c2 + c1 c2 c3 + ... + c1 ... cN.
QuadExt lambda_sum(std::span<const QuadExt> c);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// 2 sqrt10 G_j^m = q^m A_j(m) in Q(sqrt10) and det A_j(m) = 40 r^m.
CheckResult a_closed_form_check(int j, unsigned m);
QuadMat2 a_closed_form(int j, unsigned m);

// Interlacing chains of e_j^(n)(m) for m <= depth (default 2n + 4), the
// cross links, the limits, the range bounds and the base case.
CheckResult interlacing_check(unsigned n, std::size_t depth = 0);

// Relations e0(m+1) = [0; 1, 1, 2 + e0(m)] etc., sigma = 2, and e_j(m) from
// its own continued fraction for every m in the direct range.
CheckResult e_relations_check(unsigned n);

// lambda recurrence, nu_j = period product, gamma seed and lambda_0(0) form.
CheckResult lambda_recurrence_check(unsigned n);

// ---------------------------------------------------------------------------
// Exact rep for case-2 words with eventually periodic slope

enum class ArgKind { zeta, xi };
std::string to_string(ArgKind kind);

struct PhaseValues {
  std::size_t phase = 0;
  QuadExt eta;
  QuadExt alpha;
  QuadExt t;
  QuadExt zeta;
  QuadExt xi;
};

struct ExactRepResult {
  QuadExt value;
  std::size_t argmin_phase = 0;
  ArgKind argmin_kind = ArgKind::zeta;
  std::vector<std::pair<std::size_t, ArgKind>> ties;
  std::vector<PhaseValues> all_values;
  QuadExt beta;
  // True unless the period is (2,1,1), (2,1,1,2,1,1,1) or (2,1,1)^n,2,1,1,1.
  bool method_extrapolated = true;
};

ExactRepResult rep_exact_case2(const ContinuedFraction& cf);
ExactRepResult rep_exact_case2(std::span<const Integer> period);

std::vector<Integer> family_period(unsigned n);

// ---------------------------------------------------------------------------
// Rational forms h_n and the discriminants D_n

struct HnReport {
  bool zeta_agrees = false;        // 1 + 1/(h_n(e0) + 1) = zeta_0
  bool f_agrees = false;           // f_n(e0) = gamma(n)
  bool g_agrees = false;           // g_n(e0) = nu_0
  bool identities_hold = false;    // y_m and 2 z_{m+1} - 1 forms at sample z
  bool printed_form_agrees = false;  // variant with d_n in the denominator
  QuadExt h;
  QuadExt zeta;
  bool ok() const { return zeta_agrees && f_agrees && g_agrees && identities_hold; }
};

HnReport hn_cross_check(unsigned n);

struct DiscriminantReport {
  unsigned n = 0;
  Integer d;
  Integer trace;
  bool forms_agree = false;       // the three expressions for D_n
  bool convergents_agree = false;  // B_1 B^{n+1} against [1; (1,1,2)]
  int mod5 = 0;
  int mod2 = 0;
  int expected_mod5 = 0;
  int expected_mod2 = 0;
  bool table_matches() const { return mod5 == expected_mod5 && mod2 == expected_mod2; }
};

DiscriminantReport discriminant_congruence(unsigned n);
// Incremental version for n = 0..n_max.
std::vector<DiscriminantReport> discriminant_table(unsigned n_max);

// n odd or n != +-1 (mod 5). When true, asserts D_n != 0 (mod 10) and throws
// std::logic_error otherwise.
bool q10_exclusion(unsigned n);

// ---------------------------------------------------------------------------
// Limit and separation checks over the family

struct MinimalityReport {
  unsigned n_lo = 0, n_hi = 0;
  std::vector<unsigned> failures;  // n where zeta_0 is not the unique minimum
  std::optional<unsigned> holds_from;
};

MinimalityReport zeta0_minimality(unsigned n_lo, unsigned n_hi);

std::vector<CheckResult> limit_checks();
std::vector<CheckResult> separation_checks(unsigned n = 25);

}  // namespace sturmrep

#endif  // STURMREP_SPECTRUM_HPP_
