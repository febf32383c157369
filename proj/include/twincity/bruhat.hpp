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
//
// Double-coset decompositions.  Two families are implemented on top of the
// same truncated-series arithmetic:
//
//  * Bruhat cells  I^e \ G / I^e  for the positive and negative Iwahori
//    subgroups (series expanded at 0 resp. infinity), via a pivoting
//    elimination that only ever multiplies by elementary matrices lying in
//    I^e, and
//  * Birkhoff cells  B^- \ G / I^+, via row reductions whose multipliers
//    are polynomials in t^{-1} (exact elements of B^-).
//
// Every computation runs at a finite working precision and is certified:
// whenever the visible coefficient windows are too short to prove the
// label, the routines throw insufficient_precision and the adaptive
// drivers retry with a doubled window.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "twincity/matrix.hpp"
#include "twincity/series.hpp"
#include "twincity/weyl.hpp"

namespace twincity {

/// Working-precision ceiling for the adaptive drivers; reads the
/// TWINCITY_PRECISION_CAP environment variable once (default 512).
int precision_cap();

/// Column profile of the monomial representative of w: for column j
/// (0-indexed) the pair (row, k) such that the entry at (row, j) is
/// unit * t^k.  The unit is 1 except in the last column, which carries the
/// sign of the residue permutation so that the determinant is exactly one.
std::vector<std::pair<int, int>> monomial_profile(const AffinePermutation& w);

/// Canonical determinant-one monomial matrix representing w.
LoopMatrix weyl_to_monomial(const AffinePermutation& w);

template <typename K>
LaurentMat<K> weyl_to_monomial_laurent(const AffinePermutation& w) {
  auto profile = monomial_profile(w);
  int n = w.n;
  LaurentMat<K> m(n);
  for (int j = 0; j < n; ++j) {
    K unit = (j == n - 1 && w.sign() < 0) ? -K::one() : K::one();
    m.at(profile[j].first, j) = LaurentPoly<K>::monomial(profile[j].second, unit);
  }
  return m;
}

namespace detail {
inline const LaurentPoly<GaussQ>& as_laurent(const RationalFunction& f) {
  require(f.den.empty(), errc::parse_error, "matrix entry is not a Laurent polynomial");
  return f.num;
}
template <typename K>
const LaurentPoly<K>& as_laurent(const LaurentPoly<K>& f) {
  return f;
}
}  // namespace detail

/// Read the Weyl-group label off a monomial matrix (one nonzero entry per
/// row and column, each a single Laurent term).
template <typename T>
AffinePermutation monomial_to_weyl(const Mat<T>& m) {
  int n = m.n;
  std::vector<int64_t> window(n, 0);
  std::vector<char> rowseen(n, 0);
  for (int j = 0; j < n; ++j) {
    int row = -1;
    for (int i = 0; i < n; ++i) {
      if (m.at(i, j).is_zero()) continue;
      require(row < 0, errc::parse_error, "column with two nonzero entries is not monomial");
      row = i;
    }
    require(row >= 0, errc::parse_error, "zero column is not monomial");
    require(!rowseen[row], errc::parse_error, "row with two nonzero entries is not monomial");
    rowseen[row] = 1;
    const auto& poly = detail::as_laurent(m.at(row, j));
    require(poly.c.size() == 1, errc::parse_error, "matrix entry is not a single term");
    int k = poly.c.begin()->first;
    window[j] = (row + 1) - static_cast<int64_t>(n) * k;
  }
  return AffinePermutation::make(n, window);
}

/// Expand a rational matrix entrywise at the place, with every entry's
/// knowledge window reaching exactly `hi`.
Mat<Series<GaussQ>> expand_matrix(const LoopMatrix& g, Place p, int hi);

template <typename K>
Mat<Series<K>> expand_matrix_laurent(const LaurentMat<K>& g, Place p, int hi) {
  Mat<Series<K>> a(g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      const LaurentPoly<K>& f = g.at(i, j);
      a.at(i, j) = Series<K>::from_laurent(p == Place::at_zero ? f : f.flipped(), hi);
    }
  return a;
}

/// Outcome of an Iwahori-double-coset elimination at one working
/// precision.  All witnesses are series in the local uniformizer (t at 0
/// for the plus sign, 1/t at infinity for the minus sign) and satisfy
///
///     left * input * right  =  monomial representative of `label`
///
/// on the visible coefficient windows, with left, left_inv, right,
/// right_inv lying in I^e to precision.
template <typename K>
struct EliminationResult {
  AffinePermutation label;
  Mat<Series<K>> reduced;  // the normalized monomial form itself
  Mat<Series<K>> left, left_inv, right, right_inv;
};

/// One elimination pass.  `plus` selects the sign: it controls which side
/// of a pivot must be provably higher in valuation (strictly below in the
/// column and strictly left in the row for I^+, the mirror for I^-), which
/// matches exactly the positions where elementary multipliers need an
/// extra order of vanishing to stay in I^e.  Pivots are chosen at minimal
/// visible valuation, ties broken lexicographically by (row, column).
template <typename K>
EliminationResult<K> formal_bruhat(Mat<Series<K>> a, bool plus, int work_cap) {
  const int n = a.n;
  auto L = Mat<Series<K>>::identity(n), Li = L, R = L, Ri = L;
  std::vector<char> rowdone(n, 0), coldone(n, 0);
  std::vector<int> pivot_row(n, -1), pivot_val(n, 0);  // indexed by column

  for (int round = 0; round < n; ++round) {
    // Minimal visible valuation over the active block.
    std::optional<int> vmin;
    bool possibly_nonzero = false;
    for (int r = 0; r < n; ++r) {
      if (rowdone[r]) continue;
      for (int c = 0; c < n; ++c) {
        if (coldone[c]) continue;
        const Series<K>& f = a.at(r, c);
        if (!f.known_zero()) possibly_nonzero = true;
        if (auto v = f.val(); v && (!vmin || *v < *vmin)) vmin = *v;
      }
    }
    if (!vmin) {
      if (!possibly_nonzero)
        fail(errc::determinant_not_one, "active block is exactly zero, matrix is singular");
      fail(errc::insufficient_precision, "no visible valuation in the active block");
    }
    // Every hidden entry must provably sit above the minimum, otherwise it
    // could be an even smaller pivot we cannot see.
    for (int r = 0; r < n; ++r) {
      if (rowdone[r]) continue;
      for (int c = 0; c < n; ++c) {
        if (coldone[c]) continue;
        const Series<K>& f = a.at(r, c);
        if (!f.val() && !f.val_at_least(*vmin + 1))
          fail(errc::insufficient_precision, "hidden entry at the minimal valuation");
      }
    }
    // First admissible minimal pivot in lexicographic (row, column) order.
    int pr = -1, pc = -1;
    for (int r = 0; r < n && pr < 0; ++r) {
      if (rowdone[r]) continue;
      for (int c = 0; c < n && pr < 0; ++c) {
        if (coldone[c]) continue;
        auto v = a.at(r, c).val();
        if (!v || *v != *vmin) continue;
        bool ok = true;
        for (int r2 = 0; r2 < n && ok; ++r2) {
          if (rowdone[r2] || r2 == r) continue;
          if (plus ? r2 < r : r2 > r) continue;  // only the constrained side blocks
          auto u = a.at(r2, c).val();
          if (u && *u == *vmin) ok = false;
        }
        for (int c2 = 0; c2 < n && ok; ++c2) {
          if (coldone[c2] || c2 == c) continue;
          if (plus ? c2 > c : c2 < c) continue;
          auto u = a.at(r, c2).val();
          if (u && *u == *vmin) ok = false;
        }
        if (ok) {
          pr = r;
          pc = c;
        }
      }
    }
    require(pr >= 0, errc::internal_error, "no admissible pivot at minimal valuation");

    const Series<K> p = a.at(pr, pc);
    // Clear the pivot column with row operations (left witness).
    for (int r2 = 0; r2 < n; ++r2) {
      if (rowdone[r2] || r2 == pr) continue;
      const Series<K> f = a.at(r2, pc);
      if (!f.val()) continue;  // nothing visible to cancel
      Series<K> m = (-f).div(p, work_cap);
      for (int j = 0; j < n; ++j) {
        a.at(r2, j) = a.at(r2, j) + m * a.at(pr, j);
        L.at(r2, j) = L.at(r2, j) + m * L.at(pr, j);
      }
      for (int i = 0; i < n; ++i) Li.at(i, pr) = Li.at(i, pr) - Li.at(i, r2) * m;
    }
    // Clear the pivot row with column operations (right witness).
    for (int c2 = 0; c2 < n; ++c2) {
      if (coldone[c2] || c2 == pc) continue;
      const Series<K> f = a.at(pr, c2);
      if (!f.val()) continue;
      Series<K> m = (-f).div(p, work_cap);
      for (int i = 0; i < n; ++i) {
        a.at(i, c2) = a.at(i, c2) + a.at(i, pc) * m;
        R.at(i, c2) = R.at(i, c2) + R.at(i, pc) * m;
      }
      for (int j = 0; j < n; ++j) Ri.at(pc, j) = Ri.at(pc, j) - m * Ri.at(c2, j);
    }
    rowdone[pr] = coldone[pc] = 1;
    pivot_row[pc] = pr;
    pivot_val[pc] = *vmin;
  }

  // Sign of the residue permutation column -> row.
  int inversions = 0;
  for (int c = 0; c < n; ++c)
    for (int c2 = c + 1; c2 < n; ++c2)
      if (pivot_row[c] > pivot_row[c2]) ++inversions;
  // Normalize each pivot to unit * s^k by a right diagonal factor in I^e.
  for (int c = 0; c < n; ++c) {
    K unit = (c == n - 1 && inversions % 2 == 1) ? -K::one() : K::one();
    const Series<K> p = a.at(pivot_row[c], c);
    Series<K> d = Series<K>::monomial(pivot_val[c], unit).div(p, work_cap);
    Series<K> dinv = p.shifted(-pivot_val[c]).scaled(unit.inverse());
    for (int i = 0; i < n; ++i) {
      a.at(i, c) = a.at(i, c) * d;
      R.at(i, c) = R.at(i, c) * d;
    }
    for (int j = 0; j < n; ++j) Ri.at(c, j) = dinv * Ri.at(c, j);
  }

  // Certify the label: writing the result as M * Q with M the monomial
  // representative, every entry of Q must provably lie in I^e.
  for (int c = 0; c < n; ++c) {
    int r = pivot_row[c], k = pivot_val[c];
    for (int c2 = 0; c2 < n; ++c2) {
      if (c2 == c) continue;
      const Series<K>& f = a.at(r, c2);
      require(!f.val().has_value(), errc::internal_error, "residual entry left visible");
      bool wrong_side = plus ? c > c2 : c < c2;
      if (!f.val_at_least(k + (wrong_side ? 1 : 0)))
        fail(errc::insufficient_precision, "residual tail could spoil the cell label");
    }
  }

  std::vector<int64_t> window(n);
  for (int c = 0; c < n; ++c) {
    int texp = plus ? pivot_val[c] : -pivot_val[c];
    window[c] = (pivot_row[c] + 1) - static_cast<int64_t>(n) * texp;
  }
  EliminationResult<K> out;
  out.label = AffinePermutation::make(n, window);
  out.reduced = std::move(a);
  out.left = std::move(L);
  out.left_inv = std::move(Li);
  out.right = std::move(R);
  out.right_inv = std::move(Ri);
  return out;
}

/// Outcome of a Birkhoff elimination at one working precision: `left` is
/// an exact matrix of polynomials in t^{-1} lying in B^- with
/// left * input = reduced, and `reduced` equals monomial(label) * Q for a
/// certified Q in I^+.
template <typename K>
struct BirkhoffElimination {
  AffinePermutation label;
  LaurentMat<K> left;
  Mat<Series<K>> reduced;
};

namespace detail {

/// Per-row valuation profile for Birkhoff reductions: the minimal visible
/// valuation at 0 and the leftmost column attaining it, certified against
/// hidden tails.
template <typename K>
void birkhoff_profile(const Mat<Series<K>>& a, std::vector<int>& mu, std::vector<int>& col) {
  const int n = a.n;
  mu.assign(n, 0);
  col.assign(n, -1);
  for (int r = 0; r < n; ++r) {
    std::optional<int> m;
    bool possibly_nonzero = false;
    for (int c = 0; c < n; ++c) {
      const Series<K>& f = a.at(r, c);
      if (!f.known_zero()) possibly_nonzero = true;
      if (auto v = f.val(); v && (!m || *v < *m)) m = *v;
    }
    if (!m) {
      if (!possibly_nonzero)
        fail(errc::determinant_not_one, "exactly zero row, matrix is singular");
      fail(errc::insufficient_precision, "row with no visible valuation");
    }
    for (int c = 0; c < n; ++c) {
      const Series<K>& f = a.at(r, c);
      if (!f.val() && !f.val_at_least(*m + 1))
        fail(errc::insufficient_precision, "hidden entry at the row minimum");
    }
    mu[r] = *m;
    for (int c = 0; c < n; ++c)
      if (auto v = a.at(r, c).val(); v && *v == *m) {
        col[r] = c;
        break;
      }
  }
}

}  // namespace detail

/// Birkhoff reduction B^- \ G / I^+.  Rows are combined with multipliers
/// that are exact polynomials in t^{-1} (degree <= 0 when a lower row is
/// modified by an upper one, <= -1 in the opposite direction), obtained by
/// truncating a series quotient at 0.  The row profile (min valuation,
/// leftmost minimal column) increases strictly in lexicographic order for
/// the modified row, and row minima never decrease, which bounds the
/// number of reduction steps.
template <typename K>
BirkhoffElimination<K> formal_birkhoff(Mat<Series<K>> a, int work_cap) {
  const int n = a.n;
  LaurentMat<K> L = LaurentMat<K>::identity(n);
  std::vector<int> mu, col;

  int floor0 = 0;
  for (const auto& f : a.a)
    if (auto v = f.val(); v && *v < floor0) floor0 = *v;
  const long long max_steps =
      4LL * n * n * (static_cast<long long>(work_cap) - floor0 + 4);

  for (long long step = 0;; ++step) {
    require(step <= max_steps, errc::non_terminating, "Birkhoff reduction exceeded its iteration cap");
    detail::birkhoff_profile(a, mu, col);
    // Find the smallest column claimed by two or more rows.
    int cc = -1;
    for (int c = 0; c < n && cc < 0; ++c) {
      int count = 0;
      for (int r = 0; r < n; ++r) count += col[r] == c;
      if (count >= 2) cc = c;
    }
    if (cc < 0) break;  // row -> column is a bijection
    // The two claimants smallest by (valuation, row index).
    int ra = -1, rb = -1;
    for (int r = 0; r < n; ++r) {
      if (col[r] != cc) continue;
      if (ra < 0 || std::pair(mu[r], r) < std::pair(mu[ra], ra)) ra = r;
    }
    for (int r = 0; r < n; ++r) {
      if (col[r] != cc || r == ra) continue;
      if (rb < 0 || std::pair(mu[r], r) < std::pair(mu[rb], rb)) rb = r;
    }
    // Modify the row of strictly smaller valuation; on a tie the lower row
    // (larger index) is modified so the multiplier may have degree 0.
    int mod = (mu[ra] < mu[rb]) ? ra : rb;
    int src = (mod == ra) ? rb : ra;
    int bound = mod > src ? 0 : -1;  // max allowed exponent of the multiplier
    Series<K> q = a.at(mod, cc).div(a.at(src, cc), bound + 1);
    if (q.hi < bound + 1)
      fail(errc::insufficient_precision, "reduction multiplier window too short");
    LaurentPoly<K> mult = -(q.known_part().truncated_above(bound));
    require(!mult.is_zero(), errc::internal_error, "empty reduction multiplier");
    Series<K> ms = Series<K>::from_laurent(mult);
    for (int j = 0; j < n; ++j) {
      a.at(mod, j) = a.at(mod, j) + ms * a.at(src, j);
      L.at(mod, j) = L.at(mod, j) + mult * L.at(src, j);
    }
  }

  std::vector<int64_t> window(n);
  for (int r = 0; r < n; ++r)
    window[col[r]] = (r + 1) - static_cast<int64_t>(n) * mu[r];
  BirkhoffElimination<K> out;
  out.label = AffinePermutation::make(n, window);
  out.left = std::move(L);
  out.reduced = std::move(a);
  return out;
}

/// Right witness for a Birkhoff elimination: with M the monomial
/// representative of the label, Q = M^{-1} * reduced lies in I^+ and the
/// witness is Q^{-1}, so that left * input * right = M to precision.
template <typename K>
Mat<Series<K>> birkhoff_right_witness(const BirkhoffElimination<K>& be, int work_cap) {
  const int n = be.reduced.n;
  auto profile = monomial_profile(be.label);
  int sign = be.label.sign();
  Mat<Series<K>> q(n);
  for (int j = 0; j < n; ++j) {
    K unit = (j == n - 1 && sign < 0) ? -K::one() : K::one();
    for (int c = 0; c < n; ++c)
      q.at(j, c) = be.reduced.at(profile[j].first, c)
                       .shifted(-profile[j].second)
                       .scaled(unit.inverse());
  }
  Series<K> detq = q.det();
  Series<K> detq_inv = Series<K>::one().div(detq, work_cap);
  Mat<Series<K>> adj = q.adjugate();
  Mat<Series<K>> right(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) right.at(i, j) = adj.at(i, j) * detq_inv;
  return right;
}

/// Adaptive Iwahori decomposition of an exact Laurent matrix (for example
/// over a finite field): doubles the working precision until the label is
/// certified.
template <typename K>
struct LaurentBruhatResult {
  int precision = 0;
  EliminationResult<K> elim;
};

template <typename K>
LaurentBruhatResult<K> bruhat_laurent(const LaurentMat<K>& g, bool plus) {
  const int cap = precision_cap();
  for (int h = 8; h <= cap; h *= 2) {
    try {
      auto a = expand_matrix_laurent(g, plus ? Place::at_zero : Place::at_infinity, h);
      return {h, formal_bruhat(std::move(a), plus, h)};
    } catch (const insufficient_precision&) {
      if (2 * h > cap) throw;
    }
  }
  fail(errc::insufficient_precision, "precision cap exhausted");
}

template <typename K>
struct LaurentBirkhoffResult {
  int precision = 0;
  BirkhoffElimination<K> elim;
  Mat<Series<K>> right;
};

template <typename K>
LaurentBirkhoffResult<K> birkhoff_laurent(const LaurentMat<K>& g) {
  const int cap = precision_cap();
  for (int h = 8; h <= cap; h *= 2) {
    try {
      auto a = expand_matrix_laurent(g, Place::at_zero, h);
      auto elim = formal_birkhoff(std::move(a), h);
      auto right = birkhoff_right_witness(elim, h);
      return {h, std::move(elim), std::move(right)};
    } catch (const insufficient_precision&) {
      if (2 * h > cap) throw;
    }
  }
  fail(errc::insufficient_precision, "precision cap exhausted");
}

/// Adaptive Iwahori decomposition of a rational loop-group element.  The
/// matrix must be expandable at the sign's place (no poles strictly on
/// that side of the unit circle), otherwise WrongRegularity is reported.
struct BruhatDecomposition {
  int precision = 0;
  EliminationResult<GaussQ> elim;
  const AffinePermutation& label() const { return elim.label; }
};
BruhatDecomposition rational_bruhat(const LoopMatrix& g, bool plus);

/// Analytic alignment of a rational loop-group element: an exact corrector
/// from the negative Iwahori subgroup (value one at infinity, poles confined
/// to the open unit disk) with
///
///     cleared = aligner * g,     cleared pole-free on 0 < |t| < 1.
///
/// Birkhoff labels must be invariant under negative-Iwahori left
/// multiplication, and the formal elimination at 0 only guarantees that for
/// multipliers polynomial in t^{-1}; clearing the inside poles first makes
/// the formal label agree with the analytic double-coset label, so every
/// Birkhoff entry point aligns its input before eliminating.
struct InsidePoleClearing {
  LoopMatrix aligner, cleared;
};
InsidePoleClearing clear_inside_poles(const LoopMatrix& g);

/// Adaptive Birkhoff decomposition of a rational loop-group element
/// (defined for every regularity class).  The element is aligned by
/// clear_inside_poles first, so the label is the codistance label for the
/// analytic Iwahori pair; the series witnesses decompose the aligned
/// representative.
struct BirkhoffDecomposition {
  int precision = 0;
  BirkhoffElimination<GaussQ> elim;
  Mat<Series<GaussQ>> right;
  const AffinePermutation& label() const { return elim.label; }
};
BirkhoffDecomposition birkhoff(const LoopMatrix& g);

/// Exact Birkhoff decomposition over rational functions: the aligned
/// reduction with exact multipliers, yielding exact witnesses
///
///     left * g * right = weyl_to_monomial(label)
///
/// with left in the negative Iwahori (analytic and invertible outside the
/// open unit disk, lower-triangular residue at infinity; Laurent-polynomial
/// in t^{-1} whenever g has no poles inside the punctured disk) and right
/// in the positive Iwahori (no poles on the closed disk, upper-triangular
/// value at 0).
struct ExactBirkhoffDecomposition {
  AffinePermutation label;
  LoopMatrix left, right, reduced;
};
ExactBirkhoffDecomposition exact_birkhoff(const LoopMatrix& g);

}  // namespace twincity
