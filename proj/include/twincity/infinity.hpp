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
// The spherical building at infinity: complete flags of the column space
// over the rational-function field, with S_n-valued relative positions
// computed from exact intersection dimensions.  Sectors of the affine
// building converge to boundary flags; twin apartments induce a pairing of
// the two boundaries that preserves relative positions.

#pragma once

#include <vector>

#include "twincity/building.hpp"
#include "twincity/laurent.hpp"
#include "twincity/matrix.hpp"
#include "twincity/weyl.hpp"

namespace twincity {

/// A complete flag, stored as a full basis: V_i is the span of the first i
/// rows.  Rows are kept denominator-free (Laurent vectors), which changes
/// no span and keeps every rank computation division-free.
struct Flag {
  int n = 0;
  std::vector<std::vector<LaurentPoly<GaussQ>>> rows;
};

/// Rank of a list of Laurent row vectors of length n, via the largest
/// non-vanishing minor (exact, division-free).
int laurent_rank(const std::vector<std::vector<LaurentPoly<GaussQ>>>& rows, int n);

/// Build a flag from a basis given by matrix rows (denominators are
/// cleared row by row).  DegenerateFlag if the rows are not a basis.
Flag make_flag(const LoopMatrix& basis_rows);

/// The coordinate flag ordered by a finite permutation u: row k is the
/// standard basis vector e_{u(k)}.
Flag coordinate_flag(int n, const AffinePermutation& u);

/// Relative position in S_n: w(j) = i when the increment of
/// dim(F_i intersect G_j) sits at (i, j).  For coordinate flags,
/// relative_position(E_u, E_v) = u^{-1} v.
AffinePermutation relative_position(const Flag& f, const Flag& g);

/// Equality of flags (identity relative position).
bool flags_equal(const Flag& f, const Flag& g);

/// Boundary flag of the sector of direction u based at the chamber of g:
/// V_i is spanned by columns u(1), ..., u(i) of g.
Flag sector_to_flag(const LoopMatrix& g, const AffinePermutation& u);

/// A member of the i-panel of g (1 <= i <= n-1): the i-th subspace is
/// replaced by span(v_1, ..., v_{i-1}, alpha v_i + beta v_{i+1}).
Flag panel_member(const Flag& g, int i, const GaussQ& alpha, const GaussQ& beta);

/// Gate of the i-panel of g toward f: the panel member whose i-th subspace
/// meets the filtration of f as early as possible.  By the modular law the
/// gate line is the first nontrivial intersection of the panel's pencil
/// with span(g_1..g_{i-1}, f_1..f_j), scanning j upward; the scan is
/// evaluated by fraction-free reduction, so it stays division-free.
Flag panel_projection(const Flag& f, const Flag& g, int i);

/// Ronan-style boundary pairing test: the positive and negative boundary
/// apartments (sector flags of the two halves, direction by direction)
/// must be identified flag-by-flag, preserving all relative positions.
/// True for the two halves of a genuine twin apartment; false for
/// deliberately mismatched halves.
bool boundary_pair_check(const LoopMatrix& base_plus, const LoopMatrix& base_minus);
bool boundary_pair_check(const TwinApartment& a);

/// All n! sector directions (finite permutations), in lexicographic order.
std::vector<AffinePermutation> finite_permutations(int n);

}  // namespace twincity
