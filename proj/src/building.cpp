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

#include "twincity/building.hpp"

namespace twincity {

namespace {

/// Exact coefficient of t^e (resp. of s^e, s = 1/t, at infinity).
GaussQ coeff_at(const RationalFunction& f, Place p, int e) {
  if (f.is_zero()) return GaussQ::zero();
  int v = f.val(p);
  if (e < v) return GaussQ::zero();
  return f.expand(p, e - v + 1).coeff_or_throw(e, "entry coefficient");
}

/// Residue coordinate of the simple affine root s inside an Iwahori
/// element given as a certified series matrix: the unique mu such that
/// u_s(-mu) * b has that coordinate one order deeper.  Used to factor a
/// gallery step off the left witness of a decomposition.
GaussQ left_panel_coordinate(const Mat<Series<GaussQ>>& b, int s, bool plus) {
  const int n = b.n;
  Series<GaussQ> num, den;
  int numexp = 0;
  if (plus) {
    if (s == 0) {
      num = b.at(n - 1, 0);
      den = b.at(0, 0);
      numexp = 1;
    } else {
      num = b.at(s - 1, s);
      den = b.at(s, s);
    }
  } else {
    if (s == 0) {
      num = b.at(0, n - 1);
      den = b.at(n - 1, n - 1);
      numexp = 1;
    } else {
      num = b.at(s, s - 1);
      den = b.at(s - 1, s - 1);
    }
  }
  GaussQ d = den.coeff_or_throw(0, "panel residue denominator");
  require(!d.is_zero(), errc::internal_error, "Iwahori witness has a singular residue");
  return num.coeff_or_throw(numexp, "panel residue numerator") / d;
}

}  // namespace

DistanceValue delta(const Chamber& x, const Chamber& y) {
  require(x.plus == y.plus, errc::sign_mismatch, "Weyl distance needs equal signs");
  LoopMatrix h = group_inverse(x.rep) * y.rep;
  if (!analytic_at(h, x.plus ? Place::at_zero : Place::at_infinity))
    return DistanceValue::infinite();
  return DistanceValue::finite(rational_bruhat(h, x.plus).label());
}

AffinePermutation codelta(const Chamber& x, const Chamber& y) {
  require(x.plus != y.plus, errc::sign_mismatch, "codistance needs opposite signs");
  if (x.plus) return birkhoff(group_inverse(y.rep) * x.rep).label().inverse();
  return birkhoff(group_inverse(x.rep) * y.rep).label();
}

bool in_iwahori(const LoopMatrix& g, bool plus) {
  Place p = plus ? Place::at_zero : Place::at_infinity;
  if (!analytic_at(g, p)) return false;
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      const RationalFunction& f = g.at(i, j);
      if (f.is_zero()) continue;
      int need = (plus ? i > j : i < j) ? 1 : 0;
      if (f.val(p) < need) return false;
    }
  return true;
}

std::vector<Chamber> gallery(const Chamber& x, const Chamber& y) {
  DistanceValue d = delta(x, y);
  require(d.is_finite(), errc::different_components,
          "no gallery between chambers of different components");
  std::vector<Chamber> out{x};
  Chamber cur = x;
  AffinePermutation w = *d.w;
  while (!w.is_identity()) {
    int s = w.reduced_word().front();
    // Decompose h = cur^{-1} y = b1 * m(w) * b2; peeling the s-coordinate
    // off b1 gives the unique neighbour cur' in the s-panel with
    // delta(cur', y) = s * w.
    BruhatDecomposition bd = rational_bruhat(group_inverse(cur.rep) * y.rep, x.plus);
    require(bd.label() == w, errc::internal_error, "distance changed during the gallery walk");
    GaussQ mu = left_panel_coordinate(bd.elim.left_inv, s, x.plus);
    cur = panel_move(cur, s, mu);
    out.push_back(cur);
    w = AffinePermutation::simple(w.n, s).multiply(w);
  }
  // The walk ends in the coset of y; use the caller's representative.
  out.back() = y;
  return out;
}

bool TwinApartment::contains(const Chamber& d) const {
  Chamber same = d.plus ? positive_base() : negative_base();
  Chamber other = d.plus ? negative_base() : positive_base();
  DistanceValue dv = delta(same, d);
  if (!dv.is_finite()) return false;
  return codelta(other, d) == *dv.w;
}

Chamber TwinApartment::member(const AffinePermutation& w, bool plus) const {
  // Walk a reduced word from the defining chamber on the requested side.
  // Every prefix of a reduced word raises the length, so each step has a
  // unique codistance-raising neighbour and the walk stays in the apartment.
  Chamber cur = plus ? pos : neg;
  const Chamber& anchor = plus ? neg : pos;
  for (int s : w.reduced_word()) cur = codistance_raiser(anchor, cur, s);
  return cur;
}

namespace {

// True when g I^+ = pos as chambers and g I^- = neg, with both comparison
// witnesses analytic on their side of the circle.
bool is_common_base(const LoopMatrix& g, const Chamber& pos, const Chamber& neg) {
  const LoopMatrix gi = group_inverse(g);
  return in_iwahori(gi * pos.rep, true) && in_iwahori(gi * neg.rep, false);
}

}  // namespace

TwinApartment twin_apartment(const Chamber& x, const Chamber& y) {
  require(x.plus != y.plus, errc::sign_mismatch, "a twin apartment needs opposite signs");
  const Chamber& pos = x.plus ? x : y;
  const Chamber& neg = x.plus ? y : x;
  ExactBirkhoffDecomposition eb = exact_birkhoff(group_inverse(neg.rep) * pos.rep);
  require(eb.label.is_identity(), errc::not_opposite, "the chambers are not opposite");
  TwinApartment out{pos, neg, std::nullopt};
  // Try to align a common representative g with g I^+ = pos and g I^- = neg.
  // The left Birkhoff witness keeps g = neg * left^{-1} exact on the negative
  // side; it is a base precisely when the positive side also comes out
  // analytic.  Otherwise mirror the attempt through the flip, aligning the
  // positive side first.  Pairs whose representatives are twisted on both
  // sides may defeat both attempts; membership and enumeration do not need
  // the base, only the boundary map does.
  LoopMatrix cand = neg.rep * group_inverse(eb.left);
  if (is_common_base(cand, pos, neg)) {
    out.base = cand;
    return out;
  }
  ExactBirkhoffDecomposition fb =
      exact_birkhoff(bn_flip_matrix(group_inverse(pos.rep) * neg.rep));
  cand = pos.rep * group_inverse(bn_flip_matrix(fb.left));
  if (is_common_base(cand, pos, neg)) out.base = cand;
  return out;
}

Chamber codistance_raiser(const Chamber& x, const Chamber& y, int s) {
  require(x.plus != y.plus, errc::sign_mismatch, "codistance needs opposite signs");
  const int n = x.rep.n;
  require(s >= 0 && s < n, errc::parse_error, "simple-root index out of range");
  if (x.plus) {
    // y^{-1} x = b_minus * m(w^{-1}) * b_plus; the left factor's s-residue
    // locates the panel neighbour of y that raises the codistance.
    ExactBirkhoffDecomposition eb = exact_birkhoff(group_inverse(y.rep) * x.rep);
    LoopMatrix bm = group_inverse(eb.left);
    GaussQ den = coeff_at(bm.at(s == 0 ? n - 1 : s - 1, s == 0 ? n - 1 : s - 1),
                          Place::at_infinity, 0);
    require(!den.is_zero(), errc::internal_error, "Birkhoff witness has a singular residue");
    GaussQ mu = (s == 0 ? coeff_at(bm.at(0, n - 1), Place::at_infinity, 1)
                        : coeff_at(bm.at(s, s - 1), Place::at_infinity, 0)) /
                den;
    return panel_move(y, s, mu);
  }
  // x^{-1} y = b_minus * m(w) * b_plus; now the right factor's s-residue
  // is split off on the right.
  ExactBirkhoffDecomposition eb = exact_birkhoff(group_inverse(x.rep) * y.rep);
  LoopMatrix bp = group_inverse(eb.right);
  GaussQ den = coeff_at(bp.at(s == 0 ? n - 1 : s - 1, s == 0 ? n - 1 : s - 1),
                        Place::at_zero, 0);
  require(!den.is_zero(), errc::internal_error, "Birkhoff witness has a singular residue");
  GaussQ nu = (s == 0 ? coeff_at(bp.at(n - 1, 0), Place::at_zero, 1)
                      : coeff_at(bp.at(s - 1, s), Place::at_zero, 0)) /
              den;
  return panel_move(y, s, -nu);
}

}  // namespace twincity
