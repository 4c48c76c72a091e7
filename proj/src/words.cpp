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

#include "sturmrep/words.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

namespace sturmrep {

namespace {

std::uint64_t low_mask(unsigned n) { return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1); }

std::size_t to_size(const Integer& v) {
  if (v < 0 || !v.fits_ulong_p()) throw std::overflow_error("value does not fit in size_t");
  return v.get_ui();
}

void check_slope(const QuadExt& theta) {
  if (theta.is_rational()) throw std::invalid_argument("slope must be irrational");
  if (sign(theta) <= 0 || sign(theta - QuadExt(1L)) >= 0) throw std::invalid_argument("slope must lie in (0, 1)");
}

void check_intercept(const Rational& rho) {
  if (rho < 0 || rho >= 1) throw std::invalid_argument("intercept must lie in [0, 1)");
}

// floor(theta n + rho) with theta = (a + b sqrt(D))/c, rho = u/v, b != 0.
class AffineFloor {
 public:
  AffineFloor(const QuadExt& theta, const Rational& rho)
      : a_(theta.a()), b_(theta.b()), d_(theta.radicand()), u_(rho.get_num()), v_(rho.get_den()) {
    den_ = v_ * theta.c();
    uc_ = u_ * theta.c();
  }

  Integer floor_at(std::size_t n, DigitMode mode) const {
    const Integer nn(static_cast<unsigned long>(n));
    Integer num = v_ * a_ * nn + uc_;
    Integer coeff = v_ * b_ * nn;
    if (mode == DigitMode::ceiling) {
      num = -num;
      coeff = -coeff;
    }
    if (coeff == 0) {
      Integer f = floor_div(num, den_);
      return mode == DigitMode::ceiling ? Integer(-f) : f;
    }
    // coeff sqrt(D) is irrational, so its floor is +-isqrt(coeff^2 D) (- 1).
    Integer s = isqrt(Integer(coeff * coeff * d_));
    Integer whole = coeff > 0 ? Integer(num + s) : Integer(num - s - 1);
    Integer f = floor_div(whole, den_);
    return mode == DigitMode::ceiling ? Integer(-f) : f;
  }

 private:
  Integer a_, b_, d_, u_, v_, den_, uc_;
};

}  // namespace

// ---------------------------------------------------------------------------

BinaryWord BinaryWord::from_string(std::string_view bits) {
  BinaryWord w;
  for (char ch : bits) {
    if (ch == '0' || ch == '1') {
      w.push_back(ch - '0');
    } else {
      throw std::invalid_argument(std::string("invalid letter '") + ch + "' in binary word");
    }
  }
  return w;
}

int BinaryWord::at(std::size_t i) const {
  if (i < 1 || i > size_) throw std::out_of_range("word index out of range");
  return (*this)[i];
}

void BinaryWord::push_back(int bit) {
  const std::size_t off = size_ & 63;
  if (off == 0) data_.push_back(0);
  if (bit) data_.back() |= std::uint64_t{1} << off;
  ++size_;
}

void BinaryWord::push_bits(std::uint64_t bits, unsigned count) {
  if (count == 0) return;
  bits &= low_mask(count);
  const unsigned off = static_cast<unsigned>(size_ & 63);
  if (off == 0) {
    data_.push_back(bits);
  } else {
    data_.back() |= bits << off;
    if (off + count > 64) data_.push_back(bits >> (64 - off));
  }
  size_ += count;
}

void BinaryWord::append(const BinaryWord& w) {
  std::size_t pos = 0;
  while (pos < w.size_) {
    const unsigned len = static_cast<unsigned>(std::min<std::size_t>(64, w.size_ - pos));
    push_bits(w.window(pos, len), len);
    pos += len;
  }
}

std::uint64_t BinaryWord::window(std::size_t offset0, unsigned len) const {
  if (len == 0) return 0;
  const std::size_t w = offset0 >> 6;
  const unsigned off = static_cast<unsigned>(offset0 & 63);
  std::uint64_t v = data_[w] >> off;
  if (off != 0 && off + len > 64) v |= data_[w + 1] << (64 - off);
  return v & low_mask(len);
}

BinaryWord BinaryWord::factor(std::size_t i, std::size_t len) const {
  if (i < 1 || i - 1 + len > size_) throw std::out_of_range("factor out of range");
  BinaryWord out;
  std::size_t pos = i - 1;
  const std::size_t end = pos + len;
  while (pos < end) {
    const unsigned n = static_cast<unsigned>(std::min<std::size_t>(64, end - pos));
    out.push_bits(window(pos, n), n);
    pos += n;
  }
  return out;
}

BinaryWord BinaryWord::prefix(std::size_t n) const { return factor(1, n); }

BinaryWord BinaryWord::suffix(std::size_t n) const {
  if (n > size_) throw std::out_of_range("suffix longer than word");
  return factor(size_ - n + 1, n);
}

BinaryWord BinaryWord::drop_last(std::size_t n) const {
  if (n > size_) throw std::out_of_range("cannot drop more letters than the word has");
  return prefix(size_ - n);
}

bool BinaryWord::matches_at(std::size_t pos, const BinaryWord& p) const {
  if (pos < 1 || pos - 1 + p.size_ > size_) return false;
  std::size_t done = 0;
  while (done < p.size_) {
    const unsigned n = static_cast<unsigned>(std::min<std::size_t>(64, p.size_ - done));
    if (window(pos - 1 + done, n) != p.window(done, n)) return false;
    done += n;
  }
  return true;
}

std::size_t BinaryWord::count_ones() const {
  std::size_t n = 0;
  for (std::uint64_t v : data_) n += static_cast<std::size_t>(std::popcount(v));
  return n;
}

std::string BinaryWord::to_string() const {
  std::string s;
  s.reserve(size_);
  for (std::size_t i = 1; i <= size_; ++i) s += static_cast<char>('0' + (*this)[i]);
  return s;
}

// ---------------------------------------------------------------------------

int sturmian_digit(const QuadExt& theta, const Rational& rho, std::size_t n, DigitMode mode) {
  check_slope(theta);
  check_intercept(rho);
  if (n < 1) throw std::invalid_argument("digit index must be >= 1");
  const QuadExt r(rho);
  const QuadExt lo = theta * QuadExt(Integer(static_cast<unsigned long>(n))) + r;
  const QuadExt hi = lo + theta;
  Integer diff = mode == DigitMode::floor ? Integer(floor(hi) - floor(lo)) : Integer(ceil(hi) - ceil(lo));
  return static_cast<int>(diff.get_si());
}

BinaryWord sturmian_word(const QuadExt& theta, const Rational& rho, std::size_t length, DigitMode mode) {
  check_slope(theta);
  check_intercept(rho);
  AffineFloor f(theta, rho);
  BinaryWord w;
  Integer prev = f.floor_at(1, mode);
  for (std::size_t n = 1; n <= length; ++n) {
    Integer next = f.floor_at(n + 1, mode);
    w.push_back(next != prev ? 1 : 0);
    prev = std::move(next);
  }
  return w;
}

std::vector<BinaryWord> characteristic_blocks(const ContinuedFraction& cf, std::size_t k_max) {
  std::vector<BinaryWord> m;
  m.push_back(BinaryWord::from_string("0"));
  if (k_max >= 1) {
    BinaryWord m1;
    const std::size_t a1 = to_size(cf.quotient(1));
    for (std::size_t i = 1; i < a1; ++i) m1.push_back(0);
    m1.push_back(1);
    m.push_back(std::move(m1));
  }
  for (std::size_t k = 1; k < k_max; ++k) {
    BinaryWord next;
    const std::size_t a = to_size(cf.quotient(k + 1));
    for (std::size_t i = 0; i < a; ++i) next.append(m[k]);
    next.append(m[k - 1]);
    m.push_back(std::move(next));
  }
  const auto conv = convergents(cf, k_max);
  for (std::size_t k = 0; k <= k_max; ++k) {
    if (Integer(static_cast<unsigned long>(m[k].size())) != conv[k].q) throw std::logic_error("|M_k| != q_k");
    if (cf.a0() == 0 && Integer(static_cast<unsigned long>(m[k].count_ones())) != conv[k].p) {
      throw std::logic_error("#1(M_k) != p_k");
    }
  }
  return m;
}

std::vector<BinaryWord> blocks_covering(const ContinuedFraction& cf, std::size_t min_length, std::size_t k_min) {
  std::size_t k = std::max<std::size_t>(k_min, 1);
  auto conv = convergents(cf, k);
  while (conv.back().q < Integer(static_cast<unsigned long>(min_length))) {
    ++k;
    conv = convergents(cf, k);
  }
  return characteristic_blocks(cf, k);
}

BinaryWord tilde_block(const ContinuedFraction& cf, std::size_t k) {
  if (k < 1) throw std::invalid_argument("tilde_block needs k >= 1");
  const auto m = characteristic_blocks(cf, k + 1);
  if (m[k].size() + m[k - 1].size() < 2) throw std::invalid_argument("tilde_block: degenerate length");
  BinaryWord forward = (m[k] + m[k - 1]).drop_last(2);
  BinaryWord backward = (m[k - 1] + m[k]).drop_last(2);
  if (!(forward == backward)) throw std::logic_error("M_k M_{k-1} and M_{k-1} M_k differ before the last two letters");
  if (!m[k + 1].has_prefix(forward)) throw std::logic_error("tilde M_k is not a prefix of M_{k+1}");
  return forward;
}

BinaryWord characteristic_word(const ContinuedFraction& cf, std::size_t length) {
  if (length == 0) return {};
  return blocks_covering(cf, length).back().prefix(length);
}

BinaryWord case2_word(const ContinuedFraction& cf, std::size_t length) {
  BinaryWord w;
  w.push_back(1);
  // 1 M_0 ... M_{k-1} has length 1 + sum q_j, which exceeds q_k.
  const auto m = blocks_covering(cf, length);
  for (const auto& block : m) {
    if (w.size() >= length) break;
    w.append(block);
  }
  return w.prefix(std::min(length, w.size()));
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::case1:
      return "case1";
    case CaseTag::case2:
      return "case2";
    case CaseTag::case3:
      return "case3";
  }
  return "unknown";
}

InsufficientPrefix::InsufficientPrefix(std::size_t needed, std::size_t have)
    : std::runtime_error("insufficient prefix: need " + std::to_string(needed) + " letters, have " +
                         std::to_string(have)),
      needed_(needed) {}

std::size_t classify_min_length(const ContinuedFraction& cf, std::size_t k) {
  if (k < 1) throw std::invalid_argument("classify_case needs k >= 1");
  const auto conv = convergents(cf, k);
  return to_size(3 * conv[k].q + 2 * conv[k].q_prev - 2);
}

CaseState classify_case(const BinaryWord& x, const ContinuedFraction& cf, std::size_t k) {
  const std::size_t needed = classify_min_length(cf, k);
  if (x.size() < needed) throw InsufficientPrefix(needed, x.size());
  const auto m = characteristic_blocks(cf, k + 1);
  const BinaryWord tilde = tilde_block(cf, k);
  const BinaryWord& mk = m[k];
  const BinaryWord& mk1 = m[k - 1];
  const BinaryWord tail1 = mk + tilde;
  const BinaryWord tail2 = mk1 + mk + tilde;

  std::vector<CaseState> found;
  auto probe = [&](CaseTag tag, const BinaryWord& source, const BinaryWord& tail) {
    for (std::size_t len = 1; len <= source.size(); ++len) {
      BinaryWord w = source.suffix(len);
      if (x.has_prefix(w) && x.matches_at(len + 1, tail)) found.push_back({k, tag, std::move(w)});
    }
  };
  probe(CaseTag::case1, mk, tail1);
  probe(CaseTag::case2, mk, tail2);
  probe(CaseTag::case3, mk1, tail1);

  if (found.empty()) throw NoCaseMatch("no case matches at k = " + std::to_string(k));
  if (found.size() > 1) {
    std::string msg = "multiple cases match at k = " + std::to_string(k) + ":";
    for (const auto& s : found) msg += " " + to_string(s.tag) + "/|W|=" + std::to_string(s.w.size());
    throw CaseAmbiguity(msg);
  }
  return found.front();
}

std::size_t factor_count(const BinaryWord& x, std::size_t n) {
  if (n < 1 || n > x.size()) throw std::invalid_argument("factor length must be in [1, |x|]");
  const std::size_t count = x.size() - n + 1;
  if (n <= 64) {
    std::vector<std::uint64_t> seen;
    seen.reserve(count);
    for (std::size_t i = 0; i < count; ++i) seen.push_back(x.window(i, static_cast<unsigned>(n)));
    std::sort(seen.begin(), seen.end());
    return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
  }
  // Rolling hash modulo 2^61 - 1 buckets the windows; equality inside a
  // bucket is decided exactly.
  constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
  constexpr std::uint64_t kBase = 1000003;
  auto mulmod = [](std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(p & kMod) + static_cast<std::uint64_t>(p >> 61);
    return r >= kMod ? r - kMod : r;
  };
  std::uint64_t top = 1;
  for (std::size_t i = 1; i < n; ++i) top = mulmod(top, kBase);
  std::uint64_t h = 0;
  for (std::size_t i = 1; i <= n; ++i) h = (mulmod(h, kBase) + 1 + x[i]) % kMod;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  std::size_t distinct = 0;
  for (std::size_t i = 1; i <= count; ++i) {
    auto& starts = buckets[h];
    const bool known = std::any_of(starts.begin(), starts.end(), [&](std::size_t j) {
      for (std::size_t off = 0; off < n; off += 64) {
        const unsigned len = static_cast<unsigned>(std::min<std::size_t>(64, n - off));
        if (x.window(i - 1 + off, len) != x.window(j - 1 + off, len)) return false;
      }
      return true;
    });
    if (!known) {
      starts.push_back(i);
      ++distinct;
    }
    if (i < count) {
      const std::uint64_t drop = mulmod(top, static_cast<std::uint64_t>(1 + x[i]));
      h = (h + kMod - drop) % kMod;
      h = (mulmod(h, kBase) + 1 + x[i + n]) % kMod;
    }
  }
  return distinct;
}

}  // namespace sturmrep
