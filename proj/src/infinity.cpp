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

#include "twincity/infinity.hpp"

#include <algorithm>
#include <numeric>

namespace twincity {

namespace {

using Row = std::vector<LaurentPoly<GaussQ>>;

/// Any size-r minor nonzero?
bool has_nonzero_minor(const std::vector<Row>& rows, int n, int r) {
  // Enumerate row subsets and column subsets of size r.
  std::vector<int> rcomb(r), ccomb(r);
  std::iota(rcomb.begin(), rcomb.end(), 0);
  auto next_comb = [](std::vector<int>& comb, int total) {
    int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
      if (comb[i] < total - (k - i)) {
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  do {
    std::iota(ccomb.begin(), ccomb.end(), 0);
    do {
      Mat<LaurentPoly<GaussQ>> m(r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m.at(i, j) = rows[rcomb[i]][ccomb[j]];
      if (!m.det().is_zero()) return true;
    } while (next_comb(ccomb, n));
  } while (next_comb(rcomb, static_cast<int>(rows.size())));
  return false;
}

}  // namespace

int laurent_rank(const std::vector<Row>& rows, int n) {
  int rmax = std::min<int>(static_cast<int>(rows.size()), n);
  for (int r = rmax; r >= 1; --r)
    if (has_nonzero_minor(rows, n, r)) return r;
  return 0;
}

Flag make_flag(const LoopMatrix& basis_rows) {
  const int n = basis_rows.n;
  Flag f;
  f.n = n;
  f.rows.assign(n, Row(n, LaurentPoly<GaussQ>::zero()));
  for (int i = 0; i < n; ++i) {
    // Common denominator of the row: scaling a basis vector by a nonzero
    // function does not change any span.
    LaurentPoly<GaussQ> common = LaurentPoly<GaussQ>::one();
    for (int j = 0; j < n; ++j) {
      const RationalFunction& e = basis_rows.at(i, j);
      for (const auto& [root, order] : e.den) {
        LaurentPoly<GaussQ> lin =
            LaurentPoly<GaussQ>::t() - LaurentPoly<GaussQ>::constant(root);
        for (int k = 0; k < order; ++k) common = common * lin;
      }
    }
    for (int j = 0; j < n; ++j) {
      const RationalFunction& e = basis_rows.at(i, j);
      LaurentPoly<GaussQ> cleared = common;
      for (const auto& [root, order] : e.den)
        for (int k = 0; k < order; ++k) cleared = cleared.divide_linear(root);
      f.rows[i][j] = e.num * cleared;
    }
  }
  require(laurent_rank(f.rows, n) == n, errc::degenerate_flag,
          "flag basis rows are linearly dependent");
  return f;
}

Flag coordinate_flag(int n, const AffinePermutation& u) {
  require(u.n == n && u.is_finite(), errc::parse_error,
          "sector direction must be a finite permutation");
  Flag f;
  f.n = n;
  f.rows.assign(n, Row(n, LaurentPoly<GaussQ>::zero()));
  for (int k = 0; k < n; ++k)
    f.rows[k][static_cast<int>(u.window[k]) - 1] = LaurentPoly<GaussQ>::one();
  return f;
}

AffinePermutation relative_position(const Flag& f, const Flag& g) {
  require(f.n == g.n, errc::rank_mismatch, "flags of different rank");
  const int n = f.n;
  // d(i, j) = dim(F_i intersect G_j) = i + j - rank(F_i rows, G_j rows).
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == 0 || j == 0) {
        d[i][j] = 0;
        continue;
      }
      std::vector<Row> stack(f.rows.begin(), f.rows.begin() + i);
      stack.insert(stack.end(), g.rows.begin(), g.rows.begin() + j);
      d[i][j] = i + j - laurent_rank(stack, n);
    }
  std::vector<int64_t> window(n, 0);
  std::vector<char> used(n + 1, 0);
  for (int j = 1; j <= n; ++j) {
    int hit = 0;
    for (int i = 1; i <= n; ++i) {
      int inc = d[i][j] - d[i - 1][j] - d[i][j - 1] + d[i - 1][j - 1];
      require(inc == 0 || inc == 1, errc::internal_error, "intersection increments off");
      if (inc == 1) {
        window[j - 1] = i;
        require(!used[i], errc::internal_error, "doubled relative-position row");
        used[i] = 1;
        ++hit;
      }
    }
    require(hit == 1, errc::internal_error, "column without relative-position increment");
  }
  return AffinePermutation::make(n, window);
}

bool flags_equal(const Flag& f, const Flag& g) {
  return relative_position(f, g).is_identity();
}

Flag sector_to_flag(const LoopMatrix& g, const AffinePermutation& u) {
  require(u.n == g.n && u.is_finite(), errc::parse_error,
          "sector direction must be a finite permutation");
  LoopMatrix rows(g.n);
  for (int k = 0; k < g.n; ++k) {
    int col = static_cast<int>(u.window[k]) - 1;
    for (int j = 0; j < g.n; ++j) rows.at(k, j) = g.at(j, col);
  }
  return make_flag(rows);
}

Flag panel_member(const Flag& g, int i, const GaussQ& alpha, const GaussQ& beta) {
  const int n = g.n;
  require(i >= 1 && i <= n - 1, errc::parse_error, "panel index out of range");
  require(!alpha.is_zero() || !beta.is_zero(), errc::degenerate_flag,
          "zero combination spans no panel member");
  Flag out = g;
  Row combo(n, LaurentPoly<GaussQ>::zero());
  for (int j = 0; j < n; ++j)
    combo[j] = g.rows[i - 1][j].scaled(alpha) + g.rows[i][j].scaled(beta);
  if (alpha.is_zero()) {
    // Keep a full basis: the dropped v_i moves one step down.
    out.rows[i - 1] = combo;
    out.rows[i] = g.rows[i - 1];
  } else {
    out.rows[i - 1] = combo;
  }
  return out;
}

Flag panel_projection(const Flag& f, const Flag& g, int i) {
  const int n = f.n;
  require(i >= 1 && i <= n - 1, errc::parse_error, "panel index out of range");
  // Gate of the i-panel of g toward f.  Members of the panel are the lines
  // of the pencil spanned by g_i, g_{i+1} modulo S = <g_1 .. g_{i-1}>, and
  // by the modular law the gate line is the one inside S + F_j for the
  // smallest j such that that sum meets the pencil beyond S.  Scan j
  // upward and test membership by reducing g_i and g_{i+1} against an
  // echelon basis of S + F_j (fraction-free, so everything stays exact).
  auto residue = [&](std::vector<Row> stack, Row v) {
    std::vector<int> pivot;
    size_t done = 0;
    for (int col = 0; col < n && done < stack.size(); ++col) {
      size_t sel = done;
      while (sel < stack.size() && stack[sel][col].is_zero()) ++sel;
      if (sel == stack.size()) continue;
      std::swap(stack[done], stack[sel]);
      for (size_t r = done + 1; r < stack.size(); ++r) {
        if (stack[r][col].is_zero()) continue;
        Row nr(n, LaurentPoly<GaussQ>::zero());
        for (int c = 0; c < n; ++c)
          nr[c] = stack[done][col] * stack[r][c] - stack[r][col] * stack[done][c];
        stack[r] = nr;
      }
      pivot.push_back(col);
      ++done;
    }
    // Never skip a pivot: clearing with v[col] = 0 still rescales v by the
    // pivot entry, so both residues of a pencil carry one common scalar and
    // cross-multiplied coefficients lift back to the original rows.
    for (size_t r = 0; r < done; ++r) {
      int col = pivot[r];
      Row nv(n, LaurentPoly<GaussQ>::zero());
      for (int c = 0; c < n; ++c)
        nv[c] = stack[r][col] * v[c] - v[col] * stack[r][c];
      v = nv;
    }
    return v;
  };
  auto row_zero = [&](const Row& v) {
    for (const auto& e : v)
      if (!e.is_zero()) return false;
    return true;
  };
  for (int j = 0; j <= n; ++j) {
    std::vector<Row> stack(g.rows.begin(), g.rows.begin() + (i - 1));
    stack.insert(stack.end(), f.rows.begin(), f.rows.begin() + j);
    Row r0 = residue(stack, g.rows[i - 1]);
    Row r1 = residue(stack, g.rows[i]);
    if (row_zero(r0)) return g;  // the gate keeps g's own line
    if (row_zero(r1)) {          // the gate line is g_{i+1} mod S
      Flag out = g;
      out.rows[i - 1] = g.rows[i];
      out.rows[i] = g.rows[i - 1];
      return out;
    }
    int p = 0;
    while (r0[p].is_zero()) ++p;
    bool parallel = true;
    for (int c = 0; c < n && parallel; ++c)
      parallel = r1[p] * r0[c] == r0[p] * r1[c];
    if (!parallel) continue;  // the pencil still misses S + F_j
    // r1[p] g_i - r0[p] g_{i+1} reduces to zero, so it spans the gate line;
    // r1[p] != 0 here (otherwise r1 itself were zero), keeping a basis.
    Flag out = g;
    for (int c = 0; c < n; ++c)
      out.rows[i - 1][c] = r1[p] * g.rows[i - 1][c] - r0[p] * g.rows[i][c];
    return out;
  }
  fail(errc::internal_error, "panel projection found no gate line");
}

std::vector<AffinePermutation> finite_permutations(int n) {
  std::vector<int64_t> win(n);
  std::iota(win.begin(), win.end(), 1);
  std::vector<AffinePermutation> out;
  do {
    out.push_back(AffinePermutation::make(n, win));
  } while (std::next_permutation(win.begin(), win.end()));
  return out;
}

bool boundary_pair_check(const LoopMatrix& base_plus, const LoopMatrix& base_minus) {
  require(base_plus.n == base_minus.n, errc::rank_mismatch, "mismatched ranks");
  const int n = base_plus.n;
  std::vector<AffinePermutation> dirs = finite_permutations(n);
  std::vector<Flag> fp, fm;
  fp.reserve(dirs.size());
  fm.reserve(dirs.size());
  for (const auto& u : dirs) {
    fp.push_back(sector_to_flag(base_plus, u));
    fm.push_back(sector_to_flag(base_minus, u));
  }
  // The pairing matches direction to direction; it must send each flag to
  // itself and hence preserve every relative position.
  for (size_t a = 0; a < dirs.size(); ++a)
    if (!flags_equal(fp[a], fm[a])) return false;
  for (size_t a = 0; a < dirs.size(); ++a)
    for (size_t b = a + 1; b < dirs.size(); ++b)
      if (relative_position(fp[a], fp[b]) != relative_position(fm[a], fm[b]))
        return false;
  return true;
}

bool boundary_pair_check(const TwinApartment& a) {
  require(a.base.has_value(), errc::not_found,
          "the apartment carries no aligned base for the boundary map");
  return boundary_pair_check(*a.base, *a.base);
}

}  // namespace twincity
