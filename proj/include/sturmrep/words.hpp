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

// Binary words, Sturmian generators, characteristic blocks and the
// three-case decomposition of a Sturmian word relative to level k.

#ifndef STURMREP_WORDS_HPP_
#define STURMREP_WORDS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sturmrep/contfrac.hpp"
#include "sturmrep/exact.hpp"

namespace sturmrep {

// Finite word over {0, 1}. Positions are 1-based; position i is bit
// (i - 1) % 64 of storage word (i - 1) / 64, least significant first.
class BinaryWord {
 public:
  BinaryWord() = default;
  static BinaryWord from_string(std::string_view bits);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  // x_i, 1 <= i <= size(). Unchecked.
  int operator[](std::size_t i) const {
    return static_cast<int>((data_[(i - 1) >> 6] >> ((i - 1) & 63)) & 1u);
  }
  int at(std::size_t i) const;

  void push_back(int bit);
  // Appends the low `count` bits of `bits`, least significant first.
  void push_bits(std::uint64_t bits, unsigned count);
  void append(const BinaryWord& w);
  BinaryWord& operator+=(const BinaryWord& w) {
    append(w);
    return *this;
  }
  friend BinaryWord operator+(BinaryWord x, const BinaryWord& y) { return x += y; }

  BinaryWord prefix(std::size_t n) const;
  BinaryWord suffix(std::size_t n) const;
  // x_i ... x_{i+len-1}.
  BinaryWord factor(std::size_t i, std::size_t len) const;
  // Drops the last n letters (U^- applied n times).
  BinaryWord drop_last(std::size_t n) const;

  bool has_prefix(const BinaryWord& p) const { return matches_at(1, p); }
  // x_pos ... x_{pos+|p|-1} == p; false when it would run past the end.
  bool matches_at(std::size_t pos, const BinaryWord& p) const;

  // `len` <= 64 bits starting at 0-based offset `offset0`, packed least
  // significant first. Pre: offset0 + len <= size().
  std::uint64_t window(std::size_t offset0, unsigned len) const;

  std::size_t count_ones() const;
  std::string to_string() const;
  const std::vector<std::uint64_t>& storage() const { return data_; }

  friend bool operator==(const BinaryWord& x, const BinaryWord& y) {
    return x.size_ == y.size_ && x.data_ == y.data_;
  }

 private:
  std::vector<std::uint64_t> data_;
  std::size_t size_ = 0;
};

enum class DigitMode { floor, ceiling };

// s(n) = floor(theta(n+1) + rho) - floor(theta n + rho), or the ceiling
// analogue. Pre: theta irrational in (0, 1), 0 <= rho < 1, n >= 1.
int sturmian_digit(const QuadExt& theta, const Rational& rho, std::size_t n, DigitMode mode);

// x_1 ... x_length of the mechanical word; same digits as sturmian_digit,
// computed with integer square roots instead of field arithmetic.
BinaryWord sturmian_word(const QuadExt& theta, const Rational& rho, std::size_t length, DigitMode mode);

// M_0 ... M_{k_max}. Checks |M_k| = q_k and, for a0 = 0, #1(M_k) = p_k.
std::vector<BinaryWord> characteristic_blocks(const ContinuedFraction& cf, std::size_t k_max);

// Blocks M_0 ... M_k for the least k with q_k >= min_length (and k >= k_min).
std::vector<BinaryWord> blocks_covering(const ContinuedFraction& cf, std::size_t min_length, std::size_t k_min = 1);

// (M_k M_{k-1}) with the last two letters removed; checks the alternative
// order agrees and that the result is a prefix of M_{k+1}.
BinaryWord tilde_block(const ContinuedFraction& cf, std::size_t k);

// Prefix of the characteristic word, the limit of M_k.
BinaryWord characteristic_word(const ContinuedFraction& cf, std::size_t length);

// Prefix of 1 M_0 M_1 M_2 ...
BinaryWord case2_word(const ContinuedFraction& cf, std::size_t length);

enum class CaseTag { case1 = 1, case2 = 2, case3 = 3 };
std::string to_string(CaseTag tag);

struct CaseState {
  std::size_t k = 0;
  CaseTag tag = CaseTag::case1;
  BinaryWord w;
};

class InsufficientPrefix : public std::runtime_error {
 public:
  InsufficientPrefix(std::size_t needed, std::size_t have);
  std::size_t needed() const { return needed_; }

 private:
  std::size_t needed_;
};

class NoCaseMatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// More than one candidate matched; impossible for a Sturmian word.
class CaseAmbiguity : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Minimum prefix length classify_case needs at level k: 3 q_k + 2 q_{k-1} - 2.
std::size_t classify_min_length(const ContinuedFraction& cf, std::size_t k);

// Scans all 2 q_k + q_{k-1} candidates (case 1, 2, 3 in order, |W|
// increasing) and returns the unique match.
CaseState classify_case(const BinaryWord& x, const ContinuedFraction& cf, std::size_t k);

// Distinct factors of length n in x. Pre: 1 <= n <= |x|.
std::size_t factor_count(const BinaryWord& x, std::size_t n);

}  // namespace sturmrep

#endif  // STURMREP_WORDS_HPP_
