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

#ifndef STURMREP_MAT2_HPP_
#define STURMREP_MAT2_HPP_

#include "sturmrep/exact.hpp"

namespace sturmrep {

// 2x2 matrix over an exact scalar; doubles as the Mobius map
// z -> (a z + b)/(c z + d).
template <typename T>
struct Mat2 {
  T a, b, c, d;

  static Mat2 identity() { return {T(1L), T(0L), T(0L), T(1L)}; }

  T det() const { return T(a * d - b * c); }
  T trace() const { return T(a + d); }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {T(x.a * y.a + x.b * y.c), T(x.a * y.b + x.b * y.d),
            T(x.c * y.a + x.d * y.c), T(x.c * y.b + x.d * y.d)};
  }
  friend Mat2 operator*(const T& s, const Mat2& x) {
    return {T(s * x.a), T(s * x.b), T(s * x.c), T(s * x.d)};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }

  Mat2 pow(unsigned e) const {
    Mat2 result = identity();
    Mat2 base = *this;
    while (e > 0) {
      if (e & 1u) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }
};

using IntMat2 = Mat2<Integer>;
using QuadMat2 = Mat2<QuadExt>;

// Partial-quotient matrix (a 1; 1 0).
inline IntMat2 quotient_matrix(const Integer& a) { return {a, Integer(1), Integer(1), Integer(0)}; }

template <typename T>
QuadExt mobius(const Mat2<T>& m, const QuadExt& z) {
  return (QuadExt(m.a) * z + QuadExt(m.b)) / (QuadExt(m.c) * z + QuadExt(m.d));
}

template <typename T>
Mat2<QuadExt> to_quad(const Mat2<T>& m) {
  return {QuadExt(m.a), QuadExt(m.b), QuadExt(m.c), QuadExt(m.d)};
}

}  // namespace sturmrep

#endif  // STURMREP_MAT2_HPP_
