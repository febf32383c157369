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

#include <optional>
#include <string>
#include <vector>

#include "twincity/errors.hpp"
#include "twincity/laurent.hpp"
#include "twincity/ratfun.hpp"

namespace twincity {

/// Dense square matrix over any exact coefficient type providing
/// zero()/one(), +, -, *, is_zero().  Rows and columns are 0-indexed in
/// code; the mathematical discussion elsewhere uses 1-indexed positions.
template <typename T>
struct Mat {
  using entry_type = T;

  int n = 0;
  std::vector<T> a;

  Mat() = default;
  explicit Mat(int size) : n(size), a(static_cast<size_t>(size) * size, T::zero()) {}

  static Mat identity(int size) {
    Mat m(size);
    for (int i = 0; i < size; ++i) m.at(i, i) = T::one();
    return m;
  }

  T& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const T& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  Mat operator*(const Mat& o) const {
    require(n == o.n, errc::internal_error, "matrix size mismatch");
    Mat r(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (at(i, k).is_zero()) continue;
        for (int j = 0; j < n; ++j) {
          if (o.at(k, j).is_zero()) continue;
          r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
      }
    return r;
  }

  Mat transposed() const {
    Mat r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool operator==(const Mat& o) const {
    if (n != o.n) return false;
    for (size_t k = 0; k < a.size(); ++k)
      if (!(a[k] == o.a[k])) return false;
    return true;
  }

  /// Exact determinant by cofactor expansion (matrices here are tiny).
  T det() const {
    if (n == 0) return T::one();
    if (n == 1) return at(0, 0);
    T d = T::zero();
    for (int j = 0; j < n; ++j) {
      if (at(0, j).is_zero()) continue;
      T term = at(0, j) * minor_at(0, j).det();
      d = (j % 2 == 0) ? d + term : d - term;
    }
    return d;
  }

  /// Adjugate: adj(M) * M = det(M) * I.  For det-one matrices this is the
  /// exact inverse without any coefficient division.
  Mat adjugate() const {
    Mat r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        T c = minor_at(i, j).det();
        r.at(j, i) = ((i + j) % 2 == 0) ? c : T::zero() - c;
      }
    return r;
  }

  Mat minor_at(int row, int col) const {
    Mat r(n - 1);
    for (int i = 0, ri = 0; i < n; ++i) {
      if (i == row) continue;
      for (int j = 0, rj = 0; j < n; ++j) {
        if (j == col) continue;
        r.at(ri, rj) = at(i, j);
        ++rj;
      }
      ++ri;
    }
    return r;
  }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < n; ++i) {
      s += i ? ", [" : "[";
      for (int j = 0; j < n; ++j) {
        if (j) s += ", ";
        s += at(i, j).str();
      }
      s += "]";
    }
    return s + "]";
  }
};

/// Elements of the loop group: rational matrices of determinant one whose
/// poles avoid the unit circle.
using LoopMatrix = Mat<RationalFunction>;

template <typename K>
using LaurentMat = Mat<LaurentPoly<K>>;

/// Determinant-one check plus the pole-location guard |c| != 1.
inline void validate_loop_matrix(const LoopMatrix& m) {
  require(m.n >= 2, errc::parse_error, "matrix size must be at least 2");
  for (const auto& entry : m.a)
    for (const auto& [root, order] : entry.den)
      require(!(root.norm2() == mpq_class(1)), errc::pole_on_circle,
              "pole of modulus one at t = " + root.str());
  require(m.det() == RationalFunction::one(), errc::determinant_not_one,
          "determinant is " + m.det().str());
}

/// Classification of matrices by the location of their poles.
enum class Regularity { algebraic, plus_only, minus_only, neither };

inline const char* regularity_name(Regularity r) {
  switch (r) {
    case Regularity::algebraic: return "Algebraic";
    case Regularity::plus_only: return "PlusOnly";
    case Regularity::minus_only: return "MinusOnly";
    case Regularity::neither: return "Neither";
  }
  return "Neither";
}

/// Poles inside the unit circle obstruct expansion at 0; poles outside
/// obstruct expansion at infinity.  (Poles ON the circle are rejected at
/// construction time.)
inline Regularity regularity_class(const LoopMatrix& m) {
  bool inside = false, outside = false;
  for (const auto& entry : m.a)
    for (const auto& [root, order] : entry.den) {
      if (root.norm2() < mpq_class(1))
        inside = true;
      else
        outside = true;
    }
  if (!inside && !outside) return Regularity::algebraic;
  if (!inside) return Regularity::plus_only;
  if (!outside) return Regularity::minus_only;
  return Regularity::neither;
}

/// Group membership on one side: analytic on the closed unit disk for the
/// plus side (all poles outside), analytic at infinity for the minus side
/// (all poles inside).  Formal expansion exists either way since poles
/// never sit at 0 or infinity; this is the analytic regularity condition.
inline bool analytic_at(const LoopMatrix& m, Place p) {
  Regularity r = regularity_class(m);
  if (r == Regularity::algebraic) return true;
  return p == Place::at_zero ? r == Regularity::plus_only : r == Regularity::minus_only;
}

/// Smallest annulus grade over all pole moduli; empty when the matrix has
/// no poles at all (the grade is then unbounded).  Grade of a single pole
/// of modulus-squared q: the largest m >= 0 with e^m < max(|c|, 1/|c|),
/// computed with exact rational bounds on powers of e.
std::optional<unsigned> annulus_grade(const LoopMatrix& m);

/// Exact comparison e^m < sqrt(q) for a rational q > 1, used by
/// annulus_grade; exposed for tests.
bool e_power_below_modulus(unsigned m, const mpq_class& norm2);

}  // namespace twincity
