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

#include "sturmrep/spectrum.hpp"

#include <algorithm>
#include <sstream>

namespace sturmrep {

namespace {

QuadExt q(long a, long b = 0, long c = 1, long d = 1) { return QuadExt(Integer(a), Integer(b), Integer(c), Integer(d)); }

QuadExt sqrt10() { return QuadExt::sqrt(Integer(10)); }

QuadExt rat(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return QuadExt(r);
}

// x < y, exactly within one field and by certified decimals across fields.
bool less(const QuadExt& x, const QuadExt& y) {
  if (QuadExt::same_field(x, y)) return x < y;
  return compare_certified(x, y) < 0;
}

struct Affine {
  QuadExt c0, c1;  // c0 + c1 eta
  Affine operator+(const Affine& o) const { return {c0 + o.c0, c1 + o.c1}; }
  Affine scaled(const QuadExt& s) const { return {s * c0, s * c1}; }
};

void append_block(std::vector<Integer>& out, std::initializer_list<long> digits, std::size_t times) {
  for (std::size_t k = 0; k < times; ++k) {
    for (long d : digits) out.emplace_back(d);
  }
}

class CheckLog {
 public:
  explicit CheckLog(std::string name) : name_(std::move(name)) {}
  void require(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  CheckResult result() const {
    CheckResult r{name_, failed_ == 0, {}};
    std::ostringstream os;
    if (failed_ == 0) {
      os << count_ << " conditions hold";
    } else {
      os << failed_ << " of " << count_ << " conditions fail";
      for (const auto& f : failures_) os << "; " << f;
    }
    r.detail = os.str();
    return r;
  }

 private:
  std::string name_;
  std::size_t count_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

}  // namespace

namespace constants {
QuadExt phi() { return q(1, 1, 2, 5); }
QuadExt r_max() { return q(-3, 2, 2, 10); }
QuadExt r_1() { return q(48, 1, 31, 10); }
QuadExt r_2() { return q(-2693, 415, 1438, 149); }
QuadExt r_3() { return QuadExt(2L) * (QuadExt(1869L) + QuadExt(2L) * phi()) / QuadExt(2277L); }
}  // namespace constants

// ---------------------------------------------------------------------------

BoundState propagate_state(BoundState s, std::span<const Integer> digits) {
  for (const Integer& a : digits) {
    if (a < 1) throw std::invalid_argument("partial quotients must be positive");
    const QuadExt eta_new = (QuadExt(a) + s.eta).reciprocal();
    s.t = eta_new * (s.t + s.eta);
    s.eta = eta_new;
  }
  return s;
}

QuadExt bound_B1(const BoundState& s) {
  const QuadExt one(1L);
  return one + (one + s.eta) / (s.t + one + s.eta);
}

QuadExt bound_B2(const BoundState& s) {
  const QuadExt one(1L);
  return one + (s.t + s.eta) / (one + s.eta);
}

std::string to_string(BoundMode mode) { return mode == BoundMode::B2_then_B1 ? "B2_then_B1" : "B1_then_B2"; }

MonotonicityFailure::MonotonicityFailure(QuadExt at0, QuadExt at1)
    : std::runtime_error("bound has a pole in [0, 1]: value at eta=0 is " + at0.to_string() + ", at eta=1 is " +
                         at1.to_string()),
      at0_(std::move(at0)),
      at1_(std::move(at1)) {}

PatternBound pattern_exclusion_bound(std::span<const Integer> pattern, const QuadExt& threshold, BoundMode mode) {
  if (pattern.empty()) throw std::invalid_argument("pattern must be nonempty");
  for (const Integer& a : pattern) {
    if (a != 1 && a != 2) throw std::invalid_argument("pattern quotients must lie in {1, 2}");
  }
  if (!less(constants::phi(), threshold)) throw std::invalid_argument("threshold must exceed phi");

  const QuadExt one(1L);
  // State at k - 1 over the shared denominator Den(eta): eta = E/Den, t = T/Den.
  Affine den{one, QuadExt()};
  Affine e{QuadExt(), one};
  Affine t;
  if (mode == BoundMode::B2_then_B1) {
    const QuadExt s = threshold - one;  // t > s(1 + eta) - eta
    t = {s, s - one};
  } else {
    const QuadExt s = (threshold - one).reciprocal() - one;  // t < s(1 + eta)
    t = {s, s};
  }
  for (const Integer& a : pattern) {
    const Affine den_next = den.scaled(QuadExt(a)) + e;
    t = t + e;
    e = den;
    den = den_next;
  }
  Affine num, dnm;
  if (mode == BoundMode::B2_then_B1) {
    num = den + e;
    dnm = t + den + e;
  } else {
    num = t + e;
    dnm = den + e;
  }
  PatternBound out;
  out.map = {num.c1, num.c0, dnm.c1, dnm.c0};
  const QuadExt d0 = dnm.c0;
  const QuadExt d1 = dnm.c0 + dnm.c1;
  out.at_eta0 = one + (d0.is_zero() ? QuadExt() : num.c0 / d0);
  out.at_eta1 = one + (d1.is_zero() ? QuadExt() : (num.c0 + num.c1) / d1);
  if (d0.is_zero() || d1.is_zero() || sign(d0) != sign(d1)) throw MonotonicityFailure(out.at_eta0, out.at_eta1);
  out.direction = sign(out.map.det());
  const bool right = out.direction > 0;
  out.worst_eta = right ? 1 : 0;
  out.value = right ? out.at_eta1 : out.at_eta0;
  return out;
}

namespace {

struct TailFamilyTerms {
  QuadExt pn, qn;
};

TailFamilyTerms tail_family_terms(unsigned n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const QuadExt s = sqrt10();
  return {(QuadExt(3L) - s).pow(n), (QuadExt(3L) + s).pow(n)};
}

QuadExt lin(long a, long b) { return QuadExt(a) + QuadExt(b) * sqrt10(); }

}  // namespace

QuadExt tail_family_bound(unsigned n) {
  const auto [pn, qn] = tail_family_terms(n);
  const QuadExt num = QuadExt(279L) * (lin(-22, 7) * pn + lin(22, 7) * qn);
  const QuadExt den = lin(60, 40) + QuadExt(31L) * (lin(-304, 97) * pn + lin(304, 97) * qn);
  return QuadExt(1L) + num / den;
}

QuadMat2 tail_family_eta_map(unsigned n) {
  const auto [pn, qn] = tail_family_terms(n);
  const QuadExt a0 = QuadExt(93L) * (lin(-66, 21) * pn + lin(66, 21) * qn);
  const QuadExt a1 = QuadExt(93L) * (lin(-25, 8) * pn + lin(25, 8) * qn);
  const QuadExt b0 = lin(60, 40) + QuadExt(31L) * (lin(-304, 97) * pn + lin(304, 97) * qn);
  const QuadExt b1 = lin(60, 40) + QuadExt(31L) * (lin(-115, 37) * pn + lin(115, 37) * qn);
  return {a1, a0, b1, b0};
}

QuadExt tail_family_limit() {
  // p^n/q^n -> 0, leaving 1 + 279(22 + 7 sqrt10)/(31(304 + 97 sqrt10)).
  return QuadExt(1L) + QuadExt(279L) * lin(22, 7) / (QuadExt(31L) * lin(304, 97));
}

// ---------------------------------------------------------------------------

IntMat2 e_generator(int j) {
  switch (j) {
    case 0: return {Integer(1), Integer(3), Integer(2), Integer(5)};
    case 1: return {Integer(1), Integer(2), Integer(3), Integer(5)};
    case 2: return {Integer(2), Integer(3), Integer(3), Integer(4)};
    default: throw std::invalid_argument("residue must be 0, 1 or 2");
  }
}

std::vector<Integer> e_period(unsigned n, int j, std::size_t m) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const std::size_t limit = j == 0 ? n + 1 : n;
  if (j < 0 || j > 2) throw std::invalid_argument("residue must be 0, 1 or 2");
  if (m > limit) throw std::out_of_range("m beyond the continued-fraction range");
  std::vector<Integer> p;
  if (j == 1) p.emplace_back(2);
  if (j == 2) append_block(p, {1, 2}, 1);
  append_block(p, {1, 1, 2}, m);
  p.emplace_back(1);
  append_block(p, {1, 1, 2}, j == 0 ? n - m + 1 : n - m);
  if (j == 1) append_block(p, {1, 1}, 1);
  if (j == 2) p.emplace_back(1);
  return p;
}

QuadExt lambda_sum(std::span<const QuadExt> c) {
  if (c.size() < 2) return QuadExt();
  // c1 c2 (1 + c3 (1 + c4 (... (1 + cN))))
  QuadExt s(1L);
  for (std::size_t j = c.size(); j-- > 2;) s = QuadExt(1L) + c[j] * s;
  return c[0] * c[1] * s;
}

Family::Family(unsigned n, std::size_t depth) : n_(n), depth_(std::max<std::size_t>(depth ? depth : 2 * n + 4, n + 1)) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  for (int j = 0; j < 3; ++j) {
    const IntMat2 g = e_generator(j);
    auto& v = e_[j];
    v.reserve(depth_ + 1);
    v.push_back(cf_value(ContinuedFraction(Integer(0), {}, e_period(n, j, 0))));
    for (std::size_t m = 1; m <= depth_; ++m) v.push_back(mobius(g, v.back()));
  }
}

const QuadExt& Family::e(int j, std::size_t m) const {
  if (j < 0 || j > 2) throw std::invalid_argument("residue must be 0, 1 or 2");
  if (m > depth_) throw std::out_of_range("m beyond the configured depth");
  return e_[j][m];
}

QuadExt Family::sigma(std::size_t m) const { return QuadExt(1L) + e(2, m) + e(2, m) * e(1, m); }

QuadExt Family::tau(std::size_t m) const { return e(2, m) * e(1, m) * e(0, m); }

QuadExt Family::gamma(std::size_t m) const {
  QuadExt g = QuadExt(2L) + tau(0);
  for (std::size_t k = 1; k <= m; ++k) g = QuadExt(2L) + tau(k) * g;
  return g;
}

QuadExt Family::tau_j(int j, std::size_t m) const {
  switch (j) {
    case 0: return e(0, m) * e(2, m - 1) * e(1, m - 1);
    case 1: return e(1, m) * e(0, m) * e(2, m - 1);
    case 2: return e(2, m) * e(1, m) * e(0, m);
    default: throw std::invalid_argument("residue must be 0, 1 or 2");
  }
}

QuadExt Family::sigma_j(int j, std::size_t m) const {
  const QuadExt t = tau_j(j, m);
  switch (j) {
    case 0: return e(0, m) * e(2, m - 1) + t + t * e(0, m - 1);
    case 1: return e(1, m) * e(0, m) + t + t * e(1, m - 1);
    case 2: return e(2, m) * e(1, m) + t + t * e(2, m - 1);
    default: throw std::invalid_argument("residue must be 0, 1 or 2");
  }
}

QuadExt Family::nu_j(int j) const {
  QuadExt p(1L);
  switch (j) {
    case 0:
      for (std::size_t l = 1; l <= n_ + 1; ++l) p *= tau_j(0, l);
      return p * e(0, 0);
    case 1:
      for (std::size_t l = 1; l <= n_; ++l) p *= tau_j(1, l);
      return p * e(1, 0) * e(0, 0) * e(0, n_ + 1) * e(2, n_);
    case 2:
      for (std::size_t l = 0; l <= n_; ++l) p *= tau_j(2, l);
      return p * e(0, n_ + 1);
    default: throw std::invalid_argument("residue must be 0, 1 or 2");
  }
}

std::vector<QuadExt> Family::e_sequence(int j, std::size_t m) const {
  const std::size_t limit = j == 0 ? n_ + 1 : n_;
  if (j < 0 || j > 2 || m > limit) throw std::out_of_range("phase out of range");
  const std::size_t L = phase_count();
  auto value = [&](std::size_t i) -> const QuadExt& {
    return i == L - 1 ? e(0, n_ + 1) : e(static_cast<int>(i % 3), i / 3);
  };
  const std::size_t i = 3 * m + static_cast<std::size_t>(j);
  std::vector<QuadExt> out;
  out.reserve(L + 1);
  for (std::size_t s = 0; s <= L; ++s) out.push_back(value((i + L - s % L) % L));
  return out;
}

QuadExt Family::chi(int j, std::size_t m) const {
  const auto c = e_sequence(j, m);
  QuadExt prefix(1L);
  QuadExt sum;
  for (std::size_t l = 0; l < c.size(); ++l) {
    prefix *= c[l];
    if (l + 3 >= c.size()) sum += prefix;
  }
  return sum;
}

QuadExt Family::lambda(int j, std::size_t m) const {
  const auto c = e_sequence(j, m);
  return lambda_sum(c);
}

ZetaXi Family::zeta_xi(std::size_t i) const {
  if (i >= phase_count()) throw std::out_of_range("phase out of range");
  ZetaXi z;
  z.phase = i;
  z.j = static_cast<int>(i % 3);
  z.m = i / 3;
  z.e = e(z.j, z.m);
  z.lambda = lambda(z.j, z.m);
  z.nu = nu_j(z.j);
  const QuadExt one(1L);
  z.t = z.lambda / (one - z.nu);
  z.zeta = one + (one + z.e) / (z.t + one + z.e);
  z.xi = one + (z.t + z.e) / (one + z.e);
  return z;
}

// ---------------------------------------------------------------------------

QuadMat2 a_closed_form(int j, unsigned m) {
  if (j < 0 || j > 2) throw std::invalid_argument("residue must be 0, 1 or 2");
  const QuadExt s = sqrt10();
  const QuadExt r = ((QuadExt(3L) - s) / (QuadExt(3L) + s)).pow(m);
  const QuadExt one(1L);
  const long k = j == 2 ? 1 : 2;
  const QuadExt diag_a = QuadExt(-k) + s + (QuadExt(k) + s) * r;
  const QuadExt diag_d = QuadExt(k) + s + (QuadExt(-k) + s) * r;
  const long top = j == 1 ? 2 : 3;
  const long bottom = j == 0 ? 2 : 3;
  return {diag_a, QuadExt(top) * (one - r), QuadExt(bottom) * (one - r), diag_d};
}

CheckResult a_closed_form_check(int j, unsigned m) {
  CheckLog log("A_" + std::to_string(j) + "(" + std::to_string(m) + ") closed form");
  const QuadExt s = sqrt10();
  const QuadMat2 lhs = (QuadExt(2L) * s) * to_quad(e_generator(j).pow(m));
  const QuadMat2 am = a_closed_form(j, m);
  const QuadMat2 rhs = (QuadExt(3L) + s).pow(m) * am;
  log.require(lhs == rhs, "2 sqrt10 G^m != q^m A(m)");
  const QuadExt r = ((QuadExt(3L) - s) / (QuadExt(3L) + s)).pow(m);
  log.require(am.det() == QuadExt(40L) * r, "det A(m) != 40 r^m");
  return log.result();
}

CheckResult interlacing_check(unsigned n, std::size_t depth) {
  if (depth == 0) depth = 2 * n + 4;
  const Family f(n, depth);
  CheckLog log("interlacing n=" + std::to_string(n));
  const std::string tag = "n=" + std::to_string(n) + " ";
  const std::array<QuadExt, 3> lim = {q(-2, 1, 2, 10), q(-2, 1, 3, 10), q(-1, 1, 3, 10)};
  // Which parity increases: e1 evens, e0 odds, e2 odds.
  const std::array<std::size_t, 3> rising = {1, 0, 1};
  for (int j = 0; j < 3; ++j) {
    const std::string name = tag + "e" + std::to_string(j);
    for (std::size_t m = 0; m + 2 <= depth; ++m) {
      const bool up = (m % 2) == rising[j];
      const QuadExt& a = f.e(j, m);
      const QuadExt& b = f.e(j, m + 2);
      log.require(up ? a < b : b < a, name + "(" + std::to_string(m) + ") vs (" + std::to_string(m + 2) + ")");
    }
    for (std::size_t m = 0; m <= depth; ++m) {
      const bool below = (m % 2) == rising[j];
      const QuadExt& v = f.e(j, m);
      log.require(below ? less(v, lim[j]) : less(lim[j], v), name + "(" + std::to_string(m) + ") vs limit");
    }
  }
  log.require(f.e(1, 1) < f.e(0, 1), tag + "e1(1) < e0(1)");
  log.require(f.e(0, 0) < f.e(2, 1), tag + "e0(0) < e2(1)");
  log.require(less(lim[0], f.e(0, 0)), tag + "e0(0) > (-2 + sqrt10)/2");

  // Range bounds; the e0 bound comes from e0(m) = [0; 1, 1, 2 + e0(m-1)]
  // and so starts at m = 1.
  const std::array<QuadExt, 3> cap = {rat(3, 5), rat(2, 5), rat(3, 4)};
  for (int j = 0; j < 3; ++j) {
    for (std::size_t m = j == 0 ? 1 : 0; m <= depth; ++m) {
      const QuadExt& v = f.e(j, m);
      log.require(sign(v) > 0 && v < cap[j], tag + "range e" + std::to_string(j) + "(" + std::to_string(m) + ")");
    }
  }
  return log.result();
}

CheckResult e_relations_check(unsigned n) {
  const Family f(n, n + 1);
  CheckLog log("e relations n=" + std::to_string(n));
  const QuadExt one(1L), two(2L);
  for (int j = 0; j < 3; ++j) {
    const std::size_t limit = j == 0 ? n + 1 : n;
    for (std::size_t m = 0; m <= limit; ++m) {
      const QuadExt direct = cf_value(ContinuedFraction(Integer(0), {}, e_period(n, j, m)));
      log.require(direct == f.e(j, m), "e" + std::to_string(j) + "(" + std::to_string(m) + ") from its expansion");
    }
  }
  for (std::size_t m = 0; m <= n; ++m) {
    const std::string at = "(" + std::to_string(m) + ")";
    log.require(f.e(1, m) == (two + f.e(0, m)).reciprocal(), "e1 = 1/(2 + e0)" + at);
    log.require(f.e(2, m) == (one + f.e(1, m)).reciprocal(), "e2 = 1/(1 + e1)" + at);
    log.require(f.e(0, m + 1) == (one + f.e(2, m)).reciprocal(), "e0(m+1) = 1/(1 + e2)" + at);
    const std::array<std::array<long, 3>, 3> steps = {{{1, 1, 2}, {2, 1, 1}, {1, 2, 1}}};
    for (int j = 0; j < 3; ++j) {
      const auto& d = steps[j];
      const QuadExt nested =
          (QuadExt(d[0]) + (QuadExt(d[1]) + (QuadExt(d[2]) + f.e(j, m)).reciprocal()).reciprocal()).reciprocal();
      if (j == 0 || m + 1 <= n) log.require(nested == f.e(j, m + 1), "step relation e" + std::to_string(j) + at);
    }
    log.require(f.sigma(m) == two, "sigma = 2" + at);
  }
  return log.result();
}

CheckResult lambda_recurrence_check(unsigned n) {
  const Family f(n, n + 1);
  CheckLog log("lambda recurrence n=" + std::to_string(n));
  const std::size_t L = f.phase_count();
  // Period product straight from the phase values.
  QuadExt beta(1L);
  for (std::size_t i = 0; i < L; ++i) beta *= f.e_sequence(0, 0)[i];
  for (int j = 0; j < 3; ++j) {
    log.require(f.nu_j(j) == beta, "nu_" + std::to_string(j) + " = period product");
    const std::size_t limit = j == 0 ? n + 1 : n;
    for (std::size_t m = 1; m <= limit; ++m) {
      const QuadExt rec = f.sigma_j(j, m) + f.tau_j(j, m) * (f.lambda(j, m - 1) - f.chi(j, m - 1));
      log.require(rec == f.lambda(j, m), "lambda_" + std::to_string(j) + "(" + std::to_string(m) + ") recurrence");
    }
  }
  log.require(f.lambda(0, 0) == f.e(0, 0) * f.e(0, n + 1) * f.gamma(n), "lambda_0(0) = e0(0) e0(n+1) gamma(n)");
  log.require(f.gamma(0) == QuadExt(1L) + f.e(2, 0) * (QuadExt(1L) + f.e(1, 0) * (QuadExt(1L) + f.e(0, 0))),
              "gamma(0) seed");
  const QuadExt bound = rat(3, 4).pow(static_cast<unsigned>(L));
  log.require(abs(f.nu_j(0)) < bound, "|nu_0| < (3/4)^(3n+4)");
  for (std::size_t m = 0; m <= n; ++m) {
    log.require(f.tau(m) < rat(9, 50), "tau(" + std::to_string(m) + ") < 9/50");
    log.require(f.gamma(m) < QuadExt(4L), "gamma(" + std::to_string(m) + ") < 4");
  }
  return log.result();
}

// ---------------------------------------------------------------------------

std::string to_string(ArgKind kind) { return kind == ArgKind::zeta ? "zeta" : "xi"; }

std::vector<Integer> family_period(unsigned n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<Integer> p;
  append_block(p, {2, 1, 1}, n);
  append_block(p, {2, 1, 1, 1}, 1);
  return p;
}

namespace {

// True unless the period is one of the families with a known closed form.
bool extrapolated(std::span<const Integer> period) {
  const std::vector<Integer> p(period.begin(), period.end());
  if (p == to_integers(std::vector<int>{2, 1, 1})) return false;
  if (p.size() < 7 || (p.size() - 4) % 3 != 0) return true;
  return p != family_period(static_cast<unsigned>((p.size() - 4) / 3));
}

}  // namespace

ExactRepResult rep_exact_case2(std::span<const Integer> period) {
  const std::size_t L = period.size();
  if (L == 0) throw std::invalid_argument("period missing");
  std::vector<QuadExt> eta(L);
  for (std::size_t i = 0; i < L; ++i) eta[i] = eta_limit(period, i);

  ExactRepResult out;
  out.method_extrapolated = extrapolated(period);
  out.beta = QuadExt(1L);
  for (const auto& x : eta) out.beta *= x;
  const QuadExt one(1L);
  std::vector<QuadExt> window(L + 1);
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t s = 0; s <= L; ++s) window[s] = eta[(i + L - s % L) % L];
    PhaseValues v;
    v.phase = i;
    v.eta = eta[i];
    v.alpha = lambda_sum(window);
    v.t = v.alpha / (one - out.beta);
    v.zeta = one + (one + v.eta) / (v.t + one + v.eta);
    v.xi = one + (v.t + v.eta) / (one + v.eta);
    out.all_values.push_back(std::move(v));
  }
  out.value = out.all_values.front().zeta;
  for (const auto& v : out.all_values) {
    out.value = std::min(out.value, std::min(v.zeta, v.xi));
  }
  for (const auto& v : out.all_values) {
    if (v.zeta == out.value) out.ties.emplace_back(v.phase, ArgKind::zeta);
    if (v.xi == out.value) out.ties.emplace_back(v.phase, ArgKind::xi);
  }
  out.argmin_phase = out.ties.front().first;
  out.argmin_kind = out.ties.front().second;
  return out;
}

ExactRepResult rep_exact_case2(const ContinuedFraction& cf) {
  if (!cf.is_periodic()) throw std::invalid_argument("period missing");
  return rep_exact_case2(std::span<const Integer>(cf.period()));
}

// ---------------------------------------------------------------------------

HnReport hn_cross_check(unsigned n) {
  const Family f(n, n + 1);
  const IntMat2 a = e_generator(0);
  std::vector<IntMat2> pw{IntMat2::identity()};
  for (unsigned m = 1; m <= n + 2; ++m) pw.push_back(pw.back() * a);
  Integer ap(1), bp(0);
  for (unsigned j = 1; j <= n + 1; ++j) {
    ap += 2 * pw[j].a;
    bp += 2 * pw[j].b;
  }
  const IntMat2& top = pw[n + 1];

  auto h_at = [&](const QuadExt& z, const Integer& d) {
    return z / (QuadExt(1L) + z) * (QuadExt(ap) * z + QuadExt(bp)) / (QuadExt(Integer(top.c - 1)) * z + QuadExt(d));
  };
  auto f_at = [&](const QuadExt& z) {
    return (QuadExt(ap) * z + QuadExt(bp)) / (QuadExt(top.a) * z + QuadExt(top.b));
  };
  auto g_at = [&](const QuadExt& z) { return z / (QuadExt(top.c) * z + QuadExt(top.d)); };

  HnReport rep;
  const QuadExt& z0 = f.e(0, 0);
  const QuadExt one(1L);
  rep.h = h_at(z0, top.d);
  rep.zeta = f.zeta_xi(0).zeta;
  rep.zeta_agrees = one + (rep.h + one).reciprocal() == rep.zeta;
  rep.printed_form_agrees = one + (h_at(z0, pw[n].d) + one).reciprocal() == rep.zeta;
  rep.f_agrees = f_at(z0) == f.gamma(n);
  rep.g_agrees = g_at(z0) == f.nu_j(0);

  bool ok = true;
  for (const QuadExt& z : {QuadExt(), rat(1, 3), rat(2, 7), rat(3, 5), QuadExt(1L)}) {
    std::vector<QuadExt> zs;
    for (unsigned m = 0; m <= n + 2; ++m) zs.push_back(mobius(pw[m], z));
    std::vector<QuadExt> ys;
    for (unsigned m = 0; m <= n + 1; ++m) {
      const QuadExt y = zs[m] * (QuadExt(2L) * zs[m + 1] - one) / zs[m + 1];
      const IntMat2& lo = pw[m];
      const IntMat2& hi = pw[m + 1];
      ok = ok && y == QuadExt(3L) / zs[m + 1] - QuadExt(5L);
      ok = ok && y == (QuadExt(lo.a) * z + QuadExt(lo.b)) / (QuadExt(hi.a) * z + QuadExt(hi.b));
      ok = ok && QuadExt(2L) * zs[m + 1] - one == (QuadExt(lo.c) * z + QuadExt(lo.d)) / (QuadExt(hi.c) * z + QuadExt(hi.d));
      ys.push_back(y);
    }
    // Product forms of f_n and g_n against their Mobius closed forms.
    QuadExt fsum(2L), tail(1L);
    for (unsigned j = n; j-- > 0;) {
      tail *= ys[j + 1];
      fsum += QuadExt(2L) * tail;
    }
    fsum += tail * ys[0];
    QuadExt g = z;
    for (unsigned j = 1; j <= n + 1; ++j) g *= QuadExt(2L) * zs[j] - one;
    ok = ok && fsum == f_at(z) && g == g_at(z);
  }
  rep.identities_hold = ok;
  return rep;
}

namespace {

int expected_mod5(unsigned n) {
  const int sgn = (n / 5) % 2 == 0 ? 1 : -1;
  int v = 0;
  switch (n % 5) {
    case 0: v = sgn; break;
    case 2: v = 2 * sgn; break;
    case 3: v = -2 * sgn; break;
    default: v = 0; break;
  }
  return (v % 5 + 5) % 5;
}

int mod_small(const Integer& x, unsigned long m) { return static_cast<int>(mpz_fdiv_ui(x.get_mpz_t(), m)); }

DiscriminantReport make_report(unsigned n, const IntMat2& m, const std::vector<ConvergentPair>& conv) {
  DiscriminantReport rep;
  rep.n = n;
  // m = (p_{3n+3} p_{3n+2}; q_{3n+3} q_{3n+2})
  const Integer& p3 = m.a;
  const Integer& p2 = m.b;
  const Integer& q3 = m.c;
  const Integer& q2 = m.d;
  rep.trace = m.trace();
  const Integer sgn4 = n % 2 == 0 ? Integer(4) : Integer(-4);
  const Integer d1 = (q2 - p3) * (q2 - p3) + 4 * q3 * p2;
  const Integer d2 = (q2 + p3) * (q2 + p3) - sgn4;
  const Integer d3 = rep.trace * rep.trace - sgn4;
  rep.d = d3;
  rep.forms_agree = d1 == d2 && d2 == d3;
  const std::size_t k = 3 * static_cast<std::size_t>(n) + 3;
  rep.convergents_agree = conv.size() > k && conv[k].p == p3 && conv[k].q == q3 && conv[k].p_prev == p2 &&
                          conv[k].q_prev == q2;
  rep.mod5 = mod_small(rep.d, 5);
  rep.mod2 = mod_small(rep.d, 2);
  rep.expected_mod5 = expected_mod5(n);
  rep.expected_mod2 = n % 2;
  return rep;
}

const ContinuedFraction& theta_cf() {
  static const ContinuedFraction cf(Integer(1), {}, to_integers(std::vector<int>{1, 1, 2}));
  return cf;
}

const IntMat2 kB = {Integer(5), Integer(2), Integer(3), Integer(1)};
const IntMat2 kB1 = {Integer(1), Integer(1), Integer(1), Integer(0)};

}  // namespace

DiscriminantReport discriminant_congruence(unsigned n) {
  const auto conv = convergents(theta_cf(), 3 * static_cast<std::size_t>(n) + 3);
  return make_report(n, kB1 * kB.pow(n + 1), conv);
}

std::vector<DiscriminantReport> discriminant_table(unsigned n_max) {
  const auto conv = convergents(theta_cf(), 3 * static_cast<std::size_t>(n_max) + 3);
  std::vector<DiscriminantReport> out;
  out.reserve(n_max + 1);
  IntMat2 m = kB1 * kB;
  for (unsigned n = 0; n <= n_max; ++n) {
    out.push_back(make_report(n, m, conv));
    m = m * kB;
  }
  return out;
}

bool q10_exclusion(unsigned n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const bool hypothesis = n % 2 == 1 || (n % 5 != 1 && n % 5 != 4);
  if (hypothesis) {
    const Integer d = (kB1 * kB.pow(n + 1)).trace();
    const Integer dn = d * d - (n % 2 == 0 ? 4 : -4);
    if (mod_small(dn, 10) == 0) throw std::logic_error("D_n = 0 (mod 10) for n = " + std::to_string(n));
  }
  return hypothesis;
}

// ---------------------------------------------------------------------------

MinimalityReport zeta0_minimality(unsigned n_lo, unsigned n_hi) {
  if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("bad n range");
  MinimalityReport rep;
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    const Family f(n, n + 1);
    const QuadExt z0 = f.zeta_xi(0).zeta;
    bool unique = true;
    for (std::size_t i = 0; i < f.phase_count() && unique; ++i) {
      const ZetaXi v = f.zeta_xi(i);
      if (v.xi <= z0) unique = false;
      if (i > 0 && v.zeta <= z0) unique = false;
    }
    if (!unique) rep.failures.push_back(n);
  }
  unsigned from = n_hi + 1;
  for (unsigned n = n_hi + 1; n-- > n_lo;) {
    if (std::find(rep.failures.begin(), rep.failures.end(), n) != rep.failures.end()) break;
    from = n;
  }
  if (from <= n_hi) rep.holds_from = from;
  return rep;
}

std::vector<CheckResult> limit_checks() {
  std::vector<CheckResult> out;
  const Rational tiny(1, 10000000000L);
  {
    const Family f(20, 21);
    CheckLog log("e anchors at n=20");
    log.require(within(f.e(0, 0), q(0, 1, 5, 10), tiny), "e0(0) -> sqrt10/5");
    log.require(within(f.e(1, 0), q(10, -1, 18, 10), tiny), "e1(0) -> (10 - sqrt10)/18");
    log.require(within(f.e(2, 0), q(28, 1, 43, 10), tiny), "e2(0) -> (28 + sqrt10)/43");
    log.require(within(f.e(0, 21), q(-2, 1, 2, 10), tiny), "e0(n+1) -> (-2 + sqrt10)/2");
    out.push_back(log.result());
  }
  {
    CheckLog log("gamma(n) limit for n=15..20");
    log.require(QuadExt(2L) / (QuadExt(1L) - q(-3, 1, 1, 10)) == q(4, 1, 3, 10), "2/(1 - tau) = (4 + sqrt10)/3");
    for (unsigned n = 15; n <= 20; ++n) {
      const Family f(n, n + 1);
      log.require(within(f.gamma(n), q(4, 1, 3, 10), Rational(1, 1000000)), "n=" + std::to_string(n));
    }
    out.push_back(log.result());
  }
  {
    const Family f(20, 21);
    CheckLog log("lambda_0 and zeta_0 at n=20");
    log.require(within(f.lambda(0, 0), q(10, 1, 15, 10), Rational(1, 1000000)), "lambda_0(0) -> (10 + sqrt10)/15");
    log.require(within(f.lambda(0, 1), q(19, 1, 27, 10), Rational(1, 1000000)), "lambda_0(1) -> (19 + sqrt10)/27");
    log.require(within(f.zeta_xi(0).zeta, constants::r_1(), Rational(1, 1000)), "zeta_0 -> r_1");
    out.push_back(log.result());
  }
  return out;
}

std::vector<CheckResult> separation_checks(unsigned n) {
  const Family f(n, n + 1);
  const QuadExt tol = rat(1, 10000);
  const QuadExt lo0 = rat(331, 200) - tol;
  const QuadExt lo1 = rat(5, 3) - tol;
  CheckLog log("separation at n=" + std::to_string(n));
  for (std::size_t i = 0; i < f.phase_count(); ++i) {
    const ZetaXi v = f.zeta_xi(i);
    const std::string at = "i=" + std::to_string(i);
    if (v.j == 0) {
      if (v.m >= 1) log.require(lo0 < v.zeta, at + " zeta > 331/200");
      log.require(lo1 < v.xi, at + " xi > 5/3");
    } else {
      log.require(lo1 < v.zeta, at + " zeta > 5/3");
      log.require(lo1 < v.xi, at + " xi > 5/3");
    }
  }
  CheckLog delta("delta = 331/200 - r_1 > 0");
  delta.require(sign(rat(331, 200) - constants::r_1()) > 0, "delta");
  return {log.result(), delta.result()};
}

}  // namespace sturmrep
