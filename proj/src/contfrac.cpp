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

#include "sturmrep/contfrac.hpp"

#include <cctype>
#include <map>

namespace sturmrep {

namespace {

void require_positive(const std::vector<Integer>& v, const char* what) {
  for (const auto& a : v) {
    if (a < 1) throw std::invalid_argument(std::string(what) + ": partial quotients must be >= 1");
  }
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ParseError("empty partial quotient in '" + std::string(whole) + "'");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError("bad integer in '" + std::string(whole) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw ParseError("bad integer '" + std::string(s) + "' in '" + std::string(whole) + "'");
    }
  }
  return Integer(std::string(s[0] == '+' ? s.substr(1) : s), 10);
}

std::vector<Integer> parse_list(std::string_view s, std::string_view whole) {
  std::vector<Integer> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    std::string_view item = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_integer(item, whole));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(const std::vector<Integer>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].get_str();
  }
  return out;
}

}  // namespace

ContinuedFraction::ContinuedFraction(Integer a0, std::vector<Integer> preperiod, std::vector<Integer> period)
    : a0_(std::move(a0)), preperiod_(std::move(preperiod)), period_(std::move(period)) {
  require_positive(preperiod_, "preperiod");
  require_positive(period_, "period");
  if (period_.empty() && preperiod_.size() >= 2 && preperiod_.back() == 1) {
    preperiod_.pop_back();
    preperiod_.back() += 1;
  }
}

ContinuedFraction ContinuedFraction::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw ParseError("empty continued fraction");
  std::string_view v(s);
  std::size_t semi = v.find(';');
  Integer a0 = parse_integer(v.substr(0, semi), text);
  if (semi == std::string_view::npos) return ContinuedFraction(a0, {});
  std::string_view rest = v.substr(semi + 1);

  std::vector<Integer> period;
  std::size_t open = rest.find('(');
  if (open != std::string_view::npos) {
    if (rest.back() != ')') throw ParseError("period must close with ')' at the end: '" + std::string(text) + "'");
    std::string_view inner = rest.substr(open + 1, rest.size() - open - 2);
    if (inner.find_first_of("()") != std::string_view::npos) throw ParseError("nested parentheses in '" + std::string(text) + "'");
    period = parse_list(inner, text);
    if (period.empty()) throw ParseError("empty period in '" + std::string(text) + "'");
    rest = rest.substr(0, open);
    if (!rest.empty()) {
      if (rest.back() != ',') throw ParseError("missing ',' before period in '" + std::string(text) + "'");
      rest.remove_suffix(1);
    }
  } else if (rest.find(')') != std::string_view::npos) {
    throw ParseError("unbalanced ')' in '" + std::string(text) + "'");
  }
  std::vector<Integer> pre = parse_list(rest, text);
  try {
    return ContinuedFraction(a0, std::move(pre), std::move(period));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

std::optional<std::size_t> ContinuedFraction::length() const {
  if (is_periodic()) return std::nullopt;
  return preperiod_.size();
}

const Integer& ContinuedFraction::quotient(std::size_t k) const {
  if (k == 0) return a0_;
  if (k <= preperiod_.size()) return preperiod_[k - 1];
  if (period_.empty()) throw std::out_of_range("partial quotient index beyond finite expansion");
  return period_[(k - 1 - preperiod_.size()) % period_.size()];
}

std::vector<Integer> ContinuedFraction::quotients(std::size_t n) const {
  std::vector<Integer> out;
  out.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) out.push_back(quotient(k));
  return out;
}

std::string ContinuedFraction::to_string() const {
  std::string out = a0_.get_str();
  if (preperiod_.empty() && period_.empty()) return out;
  out += ';';
  out += join(preperiod_);
  if (!period_.empty()) {
    if (!preperiod_.empty()) out += ',';
    out += '(' + join(period_) + ')';
  }
  return out;
}

std::vector<ConvergentPair> convergents(const ContinuedFraction& cf, std::size_t k_max) {
  if (auto len = cf.length(); len && k_max > *len) {
    throw std::out_of_range("convergent index beyond finite expansion");
  }
  std::vector<ConvergentPair> out;
  out.reserve(k_max + 1);
  ConvergentPair cur{Integer(1), Integer(0), cf.a0(), Integer(1), 0};
  out.push_back(cur);
  for (std::size_t k = 1; k <= k_max; ++k) {
    const Integer& a = cf.quotient(k);
    ConvergentPair next{cur.p, cur.q, a * cur.p + cur.p_prev, a * cur.q + cur.q_prev, k};
    out.push_back(next);
    cur = std::move(next);
  }
  return out;
}

Rational finite_value(std::span<const Integer> quotients) {
  if (quotients.empty()) throw std::invalid_argument("finite_value: empty expansion");
  Rational x(quotients.back());
  for (std::size_t i = quotients.size() - 1; i-- > 0;) {
    x = Rational(quotients[i]) + 1 / x;
  }
  x.canonicalize();
  return x;
}

IntMat2 quotient_product(std::span<const Integer> quotients) {
  IntMat2 m = IntMat2::identity();
  for (const auto& a : quotients) m = m * quotient_matrix(a);
  return m;
}

QuadExt cf_value(const ContinuedFraction& cf) {
  std::vector<Integer> head{cf.a0()};
  head.insert(head.end(), cf.preperiod().begin(), cf.preperiod().end());
  if (!cf.is_periodic()) return QuadExt(finite_value(head));

  // The tail y = [p_1; p_2, ..., p_L, y] > 1 is the attracting fixed point
  // of the period matrix M: M10 y^2 + (M11 - M00) y - M01 = 0.
  IntMat2 m = quotient_product(cf.period());
  Integer diff = m.a - m.d;
  Integer disc = diff * diff + 4 * m.b * m.c;
  QuadExt y(diff, Integer(1), Integer(2 * m.c), disc);
  return mobius(quotient_product(head), y);
}

Rational eta(const ContinuedFraction& cf, std::size_t k) {
  if (k == 0) throw std::invalid_argument("eta: k must be >= 1");
  auto conv = convergents(cf, k);
  Rational value(conv[k].q_prev, conv[k].q);
  value.canonicalize();
  std::vector<Integer> rev{Integer(0)};
  for (std::size_t j = k; j >= 1; --j) rev.push_back(cf.quotient(j));
  if (finite_value(rev) != value) throw std::logic_error("eta: reversed-expansion identity failed");
  return value;
}

QuadExt eta_limit(std::span<const Integer> period, std::size_t phase) {
  const std::size_t len = period.size();
  if (len == 0) throw std::invalid_argument("eta_limit: empty period");
  if (phase >= len) throw std::invalid_argument("eta_limit: phase out of range");
  std::vector<Integer> rev(len);
  for (std::size_t j = 0; j < len; ++j) rev[j] = period[(phase + 2 * len - 1 - j) % len];
  return cf_value(ContinuedFraction(Integer(0), {}, std::move(rev)));
}

ContinuedFraction expand(const QuadExt& x, std::size_t max_steps) {
  Integer a0 = floor(x);
  QuadExt frac = x - QuadExt(a0);
  std::vector<Integer> digits;
  std::map<std::string, std::size_t> seen;
  for (std::size_t step = 0; step < max_steps; ++step) {
    if (frac.is_zero()) return ContinuedFraction(a0, std::move(digits));
    QuadExt y = frac.reciprocal();
    auto [it, fresh] = seen.emplace(y.to_string(), digits.size());
    if (!fresh) {
      std::vector<Integer> pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(it->second));
      std::vector<Integer> per(digits.begin() + static_cast<std::ptrdiff_t>(it->second), digits.end());
      return ContinuedFraction(a0, std::move(pre), std::move(per));
    }
    Integer a = floor(y);
    digits.push_back(a);
    frac = y - QuadExt(a);
  }
  throw std::runtime_error("expand: no period found within step cap");
}

std::vector<Integer> to_integers(std::span<const int> digits) {
  std::vector<Integer> out;
  out.reserve(digits.size());
  for (int d : digits) out.emplace_back(d);
  return out;
}

}  // namespace sturmrep
