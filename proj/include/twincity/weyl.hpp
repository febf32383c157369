// Copyright 2026 The twincity developers
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twincity/errors.hpp"

namespace twincity {

/// Element of the affine Weyl group of type A~_{n-1}, realized as an
/// affine permutation: a bijection w of the integers with
///
///     w(i + n) = w(i) + n   and   sum_{i=1}^{n} (w(i) - i) = 0,
///
/// stored by its window [w(1), ..., w(n)].  The generators are s_1..s_{n-1}
/// (finite transpositions) and the affine reflection s_0.
struct AffinePermutation {
  int n = 0;
  std::vector<int64_t> window;  // window[i-1] = w(i)

  AffinePermutation() = default;
  AffinePermutation(int size, std::vector<int64_t> win) : n(size), window(std::move(win)) {}

  static AffinePermutation identity(int n);
  /// Simple reflection s_i, 0 <= i <= n-1.
  static AffinePermutation simple(int n, int i);
  /// Validate and build from a window; throws on malformed input.
  static AffinePermutation make(int n, const std::vector<int64_t>& win);
  /// Longest element of the finite subgroup generated by s_1..s_{n-1}.
  static AffinePermutation finite_w0(int n);

  bool is_identity() const;
  bool operator==(const AffinePermutation& o) const { return n == o.n && window == o.window; }
  bool operator!=(const AffinePermutation& o) const { return !(*this == o); }
  bool operator<(const AffinePermutation& o) const { return window < o.window; }

  /// w(i) for any integer i, via periodicity.
  int64_t eval(int64_t i) const;

  AffinePermutation multiply(const AffinePermutation& o) const;  // (this o o)(i) = this(o(i))
  AffinePermutation inverse() const;

  /// Coxeter length: number of inversion classes,
  /// l(w) = sum_{1<=i<j<=n} |floor((w(j) - w(i)) / n)|.
  int64_t length() const;

  /// Right descent: l(w s_i) < l(w).  Equivalent to w(i) > w(i+1) with
  /// positions read modulo the affine periodicity.
  bool right_descent(int i) const;
  bool left_descent(int i) const { return inverse().right_descent(i); }

  /// Right multiplication by s_i (constant-time window surgery).
  AffinePermutation times_simple(int i) const;
  /// Left multiplication by s_i.
  AffinePermutation simple_times(int i) const;

  /// Canonical reduced word: repeatedly strip the smallest-index right
  /// descent, collecting letters so that w = s_{a_1} ... s_{a_k}.
  std::vector<int> reduced_word() const;

  static AffinePermutation from_word(int n, const std::vector<int>& word);

  /// True when the window is a permutation of 1..n (element of the finite
  /// Weyl group S_n inside the affine group).
  bool is_finite() const;

  /// Parity of the underlying residue permutation: +1 or -1.
  int sign() const;

  std::string str() const;
};

/// All group elements of length <= bound, ordered by (length, window) so
/// the enumeration is deterministic.
std::vector<AffinePermutation> weyl_ball(int n, int bound);

}  // namespace twincity
