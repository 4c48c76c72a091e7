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

#include "sturmrep/repetition.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace sturmrep {

namespace {

std::uint64_t low_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1); }

std::string at_n(std::size_t n) { return "n=" + std::to_string(n) + ": "; }

Integer big(std::size_t v) { return Integer(static_cast<unsigned long>(v)); }

Rational ratio(std::size_t num, std::size_t den) {
  Rational q(big(num), big(den));
  q.canonicalize();
  return q;
}

std::size_t to_size(const Integer& v) {
  if (v < 0 || !v.fits_ulong_p()) throw std::overflow_error("value does not fit in size_t");
  return v.get_ui();
}

}  // namespace

std::vector<std::size_t> RepProfile::sturmian_hits() const {
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= r.size(); ++n) {
    if (r[n - 1] && *r[n - 1] == 2 * n + 1) out.push_back(n);
  }
  return out;
}

RepProfile r_profile_oracle(const BinaryWord& x, std::size_t n_max) {
  const std::size_t len = x.size();
  // fw[p] holds x_{p+1} ... x_{p+64} (zero padded), so the first chunk of
  // every comparison is a single masked xor.
  std::vector<std::uint64_t> fw(len + 1, 0);
  for (std::size_t p = 0; p < len; ++p) fw[p] = x.window(p, static_cast<unsigned>(std::min<std::size_t>(64, len - p)));

  auto equal_factors = [&](std::size_t i0, std::size_t j0, std::size_t n) {
    if ((fw[i0] ^ fw[j0]) & low_mask(n)) return false;
    for (std::size_t off = 64; off < n; off += 64) {
      const std::uint64_t mask = low_mask(n - off);
      if ((fw[i0 + off] ^ fw[j0 + off]) & mask) return false;
    }
    return true;
  };

  RepProfile out;
  out.source_length = len;
  out.r.assign(n_max, std::nullopt);
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t m = n + 1; m <= len && !out.r[n - 1]; ++m) {
      const std::size_t j0 = m - n;  // 0-based start of x_{m-n+1} ... x_m
      for (std::size_t i0 = 0; i0 < j0; ++i0) {
        if (equal_factors(i0, j0, n)) {
          out.r[n - 1] = m;
          break;
        }
      }
    }
  }
  return out;
}

std::vector<std::size_t> repeated_suffix_lengths(const BinaryWord& x) {
  struct State {
    std::size_t len = 0;
    std::ptrdiff_t link = -1;
    std::array<std::ptrdiff_t, 2> next{-1, -1};
  };
  std::vector<State> st;
  st.reserve(2 * x.size() + 2);
  st.emplace_back();
  std::ptrdiff_t last = 0;
  std::vector<std::size_t> s(x.size());
  for (std::size_t m = 1; m <= x.size(); ++m) {
    const int c = x[m];
    const auto cur = static_cast<std::ptrdiff_t>(st.size());
    st.push_back({st[last].len + 1, -1, {-1, -1}});
    std::ptrdiff_t p = last;
    while (p != -1 && st[p].next[c] == -1) {
      st[p].next[c] = cur;
      p = st[p].link;
    }
    if (p == -1) {
      st[cur].link = 0;
    } else {
      const std::ptrdiff_t q = st[p].next[c];
      if (st[p].len + 1 == st[q].len) {
        st[cur].link = q;
      } else {
        const auto clone = static_cast<std::ptrdiff_t>(st.size());
        State copy = st[q];
        copy.len = st[p].len + 1;
        st.push_back(copy);
        while (p != -1 && st[p].next[c] == q) {
          st[p].next[c] = clone;
          p = st[p].link;
        }
        st[q].link = clone;
        st[cur].link = clone;
      }
    }
    last = cur;
    s[m - 1] = st[st[cur].link].len;
  }
  return s;
}

RepProfile r_profile_fast(const BinaryWord& x, std::size_t n_max) {
  const auto s = repeated_suffix_lengths(x);
  RepProfile out;
  out.source_length = x.size();
  out.r.assign(n_max, std::nullopt);
  std::size_t n = 1;
  for (std::size_t m = 1; m <= x.size() && n <= n_max; ++m) {
    while (n <= n_max && s[m - 1] >= n) out.r[n++ - 1] = m;
  }
  return out;
}

RepEstimate rep_estimate(const RepProfile& profile, const Rational& window_fraction) {
  if (window_fraction <= 0 || window_fraction >= 1) throw std::invalid_argument("window fraction must lie in (0, 1)");
  const std::size_t n_max = profile.n_max();
  Rational lo_exact = window_fraction * Rational(big(n_max));
  Integer lo_ceil;
  mpz_cdiv_q(lo_ceil.get_mpz_t(), lo_exact.get_num_mpz_t(), lo_exact.get_den_mpz_t());
  RepEstimate est;
  est.n_lo = std::max<std::size_t>(1, to_size(lo_ceil));
  est.n_hi = n_max;
  bool any = false;
  for (std::size_t n = est.n_lo; n <= est.n_hi; ++n) {
    const auto& v = profile.at(n);
    if (!v) continue;
    const Rational value = ratio(*v, n);
    if (!any || value < est.window_min) {
      est.window_min = value;
      est.argmin_n = n;
      any = true;
    }
  }
  if (!any) throw std::invalid_argument("rep_estimate: empty window");
  for (std::size_t n = 1; n < n_max; ++n) {
    const auto& a = profile.at(n);
    const auto& b = profile.at(n + 1);
    if (a && b && *b > *a + 1) {
      est.record_lows.push_back({n, ratio(*a, n)});
    }
  }
  return est;
}

SturmianReport sturmian_check(const RepProfile& profile) {
  SturmianReport rep;
  const std::size_t n_max = profile.n_max();
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto& v = profile.at(n);
    if (!v) continue;
    ++rep.checked;
    const std::uint64_t r = *v;
    if (r < n + 1) rep.violations.push_back(at_n(n) + "r(n) = " + std::to_string(r) + " < n + 1");
    if (r > 2 * n + 1) rep.violations.push_back(at_n(n) + "r(n) = " + std::to_string(r) + " > 2n + 1");
    if (r == 2 * n + 1) rep.hits.push_back(n);
    if (n >= 2) {
      const auto& prev = profile.at(n - 1);
      if (prev) {
        if (r < *prev + 1) rep.violations.push_back(at_n(n) + "r(n) < r(n-1) + 1");
        if (r != 2 * n + 1 && r != *prev + 1) {
          rep.violations.push_back(at_n(n) + "r(n) = " + std::to_string(r) + " != 2n + 1 but r(n-1) + 1 = " +
                                   std::to_string(*prev + 1));
        }
      }
    }
  }
  std::optional<std::size_t> from;
  for (std::size_t n = n_max; n >= 1; --n) {
    const auto& v = profile.at(n);
    if (v && *v > 2 * n) break;
    from = n;
  }
  rep.periodic_from = from;
  return rep;
}

std::vector<std::string> complexity_check(const BinaryWord& x, const RepProfile& profile) {
  std::vector<std::string> violations;
  for (std::size_t n = 1; n <= profile.n_max() && n <= x.size(); ++n) {
    const auto& v = profile.at(n);
    if (!v) continue;
    const std::size_t p = factor_count(x, n);
    if (*v > p + n) {
      violations.push_back(at_n(n) + "r(n) = " + std::to_string(*v) + " > p(n) + n = " + std::to_string(p + n));
    }
  }
  return violations;
}

IrrationalityExponent irrationality_exponent(const QuadExt& rep) {
  const int s = sign(rep - QuadExt(1L));
  if (s < 0) throw std::invalid_argument("rep value must be >= 1");
  if (s == 0) return {true, QuadExt()};
  return {false, rep / (rep - QuadExt(1L))};
}

bool LowerBoundReport::ok() const {
  return std::all_of(levels.begin(), levels.end(), [](const LowerBoundLevel& l) { return l.violations.empty(); });
}

LowerBoundReport lower_bound_check(const BinaryWord& x, const ContinuedFraction& cf, std::size_t k_lo,
                                   std::size_t k_hi, const RepProfile* profile) {
  if (k_lo < 1 || k_hi < k_lo) throw std::invalid_argument("lower_bound_check: bad k range");
  const auto conv = convergents(cf, k_hi + 1);
  RepProfile own;
  if (profile == nullptr) {
    own = r_profile_fast(x, to_size(conv[k_hi + 1].q + conv[k_hi].q));
    profile = &own;
  }
  auto r_at = [&](std::size_t n) -> std::optional<std::uint64_t> {
    if (n < 1 || n > profile->n_max()) return std::nullopt;
    return profile->at(n);
  };

  LowerBoundReport report;
  for (std::size_t k = k_lo; k <= k_hi; ++k) {
    LowerBoundLevel level;
    level.k = k;
    CaseState state;
    try {
      state = classify_case(x, cf, k);
    } catch (const std::exception& e) {
      level.note = std::string("skipped: ") + e.what();
      report.levels.push_back(std::move(level));
      continue;
    }
    if (state.tag != CaseTag::case2) {
      level.note = "skipped: " + to_string(state.tag);
      report.levels.push_back(std::move(level));
      continue;
    }
    level.case2 = true;
    const std::size_t qk = to_size(conv[k].q);
    const std::size_t qk1 = to_size(conv[k].q_prev);
    const std::size_t qk_next = to_size(conv[k + 1].q);
    const std::size_t w = state.w.size();
    std::size_t unresolved = 0;
    auto check = [&](std::size_t n_from, std::size_t n_to, std::size_t add, const char* branch) {
      for (std::size_t n = n_from; n <= n_to; ++n) {
        const auto r = r_at(n);
        if (!r) {
          ++unresolved;
          continue;
        }
        ++level.checked;
        if (*r < n + add) {
          level.violations.push_back(at_n(n) + branch + ": r(n) = " + std::to_string(*r) + " < " +
                                     std::to_string(n + add));
        }
      }
    };
    check(qk + qk1 - 1, w + qk + qk1 - 2, qk + qk1, "branch 1");
    check(w + qk + qk1 - 1, qk_next + qk - 2, w + qk + qk1, "branch 2");
    if (unresolved > 0) level.note = std::to_string(unresolved) + " indices unresolved";

    const Rational eta = ratio(qk1, qk);
    const Rational t = ratio(w, qk);
    const Rational eps = ratio(2, qk);
    const Rational b1 = 1 + (1 + eta) / (t + 1 + eta) + eps;
    const Rational b2 = 1 + (t + eta) / (1 + eta) + eps;
    const std::size_t n1 = w + qk + qk1 - 2;
    const std::size_t n2 = qk + qk1 - 2;
    if (auto r = r_at(n1); r && n1 > 0) level.upper1_holds = ratio(*r, n1) < b1;
    if (auto r = r_at(n2); r && n2 > 0) level.upper2_holds = ratio(*r, n2) < b2;
    report.levels.push_back(std::move(level));
  }
  return report;
}

}  // namespace sturmrep
