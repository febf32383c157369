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
// The twin building attached to SL_n over a ring of Laurent polynomials or
// rational functions: chambers are cosets g I^e of the positive/negative
// Iwahori subgroups, Weyl distances come from the Iwahori double-coset
// label of x^{-1} y, and codistances between opposite signs come from the
// Birkhoff label.  Everything is exact; the only approximation anywhere is
// a certified finite working precision inside the decompositions.

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "twincity/bruhat.hpp"
#include "twincity/matrix.hpp"
#include "twincity/ratfun.hpp"
#include "twincity/weyl.hpp"

namespace twincity {

/// A chamber of one half of the twin building: a sign and a determinant-one
/// representative of the coset rep * I^(sign).
template <typename M>
struct ChamberT {
  bool plus = true;
  M rep;
};

/// Chambers over the rational-function field (the full twin city lives
/// here: representatives may have poles away from 0 and infinity).
using Chamber = ChamberT<LoopMatrix>;

/// Chambers over F_p[t, t^{-1}]: the finite-field tier used by the
/// brute-force oracles and the counting tests.
template <typename K>
using FChamber = ChamberT<Mat<LaurentPoly<K>>>;

/// Inverse of a determinant-one matrix, exactly and division-free.
template <typename M>
M group_inverse(const M& g) {
  return g.adjugate();
}

template <typename K>
void validate_laurent_matrix(const Mat<LaurentPoly<K>>& m) {
  require(m.n >= 2, errc::rank_mismatch, "matrices must be at least 2 x 2");
  require(m.det() == LaurentPoly<K>::one(), errc::determinant_not_one,
          "representative must have determinant one");
}

inline Chamber make_chamber(bool plus, LoopMatrix rep) {
  validate_loop_matrix(rep);
  return {plus, std::move(rep)};
}
template <typename K>
FChamber<K> make_fchamber(bool plus, Mat<LaurentPoly<K>> rep) {
  validate_laurent_matrix(rep);
  return {plus, std::move(rep)};
}

/// The standard chamber I^e itself.
inline Chamber base_chamber(int n, bool plus) {
  return {plus, LoopMatrix::identity(n)};
}
template <typename K>
FChamber<K> base_fchamber(int n, bool plus) {
  return {plus, Mat<LaurentPoly<K>>::identity(n)};
}

/// Weyl-group-valued distance, infinite across different components of the
/// same sign (the codistance between opposite signs is always finite).
struct DistanceValue {
  std::optional<AffinePermutation> w;

  static DistanceValue finite(AffinePermutation v) { return {std::move(v)}; }
  static DistanceValue infinite() { return {}; }

  bool is_finite() const { return w.has_value(); }
  bool operator==(const DistanceValue& o) const { return w == o.w; }
  std::string str() const { return w ? w->str() : "infinite"; }
};

namespace detail {

/// Uniform construction of single-term matrix entries and of monomial
/// representatives for the two entry types (rational functions over the
/// Gaussian rationals, Laurent polynomials over a generic field).
template <typename E>
struct entry_traits;

template <>
struct entry_traits<RationalFunction> {
  using scalar = GaussQ;
  static RationalFunction term(int e, const GaussQ& a) {
    return RationalFunction::from_laurent(LaurentPoly<GaussQ>::monomial(e, a));
  }
  static Mat<RationalFunction> monomial_rep(const AffinePermutation& w) {
    return weyl_to_monomial(w);
  }
};

template <typename K>
struct entry_traits<LaurentPoly<K>> {
  using scalar = K;
  static LaurentPoly<K> term(int e, const K& a) { return LaurentPoly<K>::monomial(e, a); }
  static Mat<LaurentPoly<K>> monomial_rep(const AffinePermutation& w) {
    return weyl_to_monomial_laurent<K>(w);
  }
};

}  // namespace detail

template <typename E>
using scalar_of = typename detail::entry_traits<E>::scalar;

/// Elementary unipotent u_s(c) attached to the simple affine root s
/// (s = 0 is the affine node).  On the positive side the affine root uses
/// the t * E_{n,1} corner, on the negative side the t^{-1} * E_{1,n} one.
template <typename E>
Mat<E> unipotent_rep(int n, int s, const scalar_of<E>& c, bool plus) {
  require(n >= 2 && s >= 0 && s < n, errc::parse_error, "simple-root index out of range");
  Mat<E> m = Mat<E>::identity(n);
  if (plus) {
    if (s == 0)
      m.at(n - 1, 0) = detail::entry_traits<E>::term(1, c);
    else
      m.at(s - 1, s) = detail::entry_traits<E>::term(0, c);
  } else {
    if (s == 0)
      m.at(0, n - 1) = detail::entry_traits<E>::term(-1, c);
    else
      m.at(s, s - 1) = detail::entry_traits<E>::term(0, c);
  }
  return m;
}

/// The chamber rep * u_s(c) * m(s) in the s-panel of the input.  Together
/// with the input itself, these chambers (c ranging over the coefficient
/// field) exhaust the panel, pairwise at distance s.
template <typename M>
ChamberT<M> panel_move(const ChamberT<M>& c, int s,
                       const scalar_of<typename M::entry_type>& lam) {
  using E = typename M::entry_type;
  const int n = c.rep.n;
  M u = unipotent_rep<E>(n, s, lam, c.plus);
  M sm = detail::entry_traits<E>::monomial_rep(AffinePermutation::simple(n, s));
  return {c.plus, c.rep * u * sm};
}

/// The complete s-panel over F_p: p + 1 chambers including the input.
template <std::uint32_t P>
std::vector<FChamber<Fp<P>>> panel_neighbors(const FChamber<Fp<P>>& c, int s) {
  std::vector<FChamber<Fp<P>>> out{c};
  for (std::uint32_t v = 0; v < P; ++v) out.push_back(panel_move(c, s, Fp<P>(v)));
  return out;
}

/// Weyl distance between chambers of equal sign.  Over the rational field
/// the distance is infinite exactly when the two representatives differ by
/// a factor that is not analytic on the sign's side of the unit circle
/// (the chambers then lie in different components of the city).
DistanceValue delta(const Chamber& x, const Chamber& y);

template <typename K>
DistanceValue delta(const FChamber<K>& x, const FChamber<K>& y) {
  require(x.plus == y.plus, errc::sign_mismatch, "Weyl distance needs equal signs");
  auto h = group_inverse(x.rep) * y.rep;
  return DistanceValue::finite(bruhat_laurent(h, x.plus).elim.label);
}

/// Codistance between chambers of opposite signs; total (never infinite),
/// even across components.  Fixed side convention: for X = x I^+ and
/// Y = y I^-, this is the I^+ w I^- label of x^{-1} y.
AffinePermutation codelta(const Chamber& x, const Chamber& y);

template <typename K>
AffinePermutation codelta(const FChamber<K>& x, const FChamber<K>& y) {
  require(x.plus != y.plus, errc::sign_mismatch, "codistance needs opposite signs");
  if (x.plus) return birkhoff_laurent(group_inverse(y.rep) * x.rep).elim.label.inverse();
  return birkhoff_laurent(group_inverse(x.rep) * y.rep).elim.label;
}

template <typename M>
bool is_opposite(const ChamberT<M>& x, const ChamberT<M>& y) {
  return codelta(x, y).is_identity();
}

/// Coset equality: same sign and identity Weyl distance.
template <typename M>
bool chambers_equal(const ChamberT<M>& x, const ChamberT<M>& y) {
  if (x.plus != y.plus) return false;
  DistanceValue d = delta(x, y);
  return d.is_finite() && d.w->is_identity();
}

/// Exact membership test for the positive/negative Iwahori subgroup (the
/// matrix is assumed to have determinant one).
bool in_iwahori(const LoopMatrix& g, bool plus);

template <typename K>
bool in_iwahori(const Mat<LaurentPoly<K>>& g, bool plus) {
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      const LaurentPoly<K>& f = g.at(i, j);
      if (f.is_zero()) continue;
      int need = (plus ? i > j : i < j) ? 1 : 0;
      if ((plus ? f.v0() : f.vinf()) < need) return false;
    }
  return true;
}

/// The sign-swapping involution g -> adjugate(g(1/t)^T).  It exchanges the
/// two Iwahori subgroups, so it flips chambers between the halves of the
/// twin building and turns distances into mirrored distances.
template <typename M>
M bn_flip_matrix(const M& g) {
  M f(g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) f.at(i, j) = g.at(j, i).flipped();
  return f.adjugate();
}

template <typename M>
ChamberT<M> bn_flip(const ChamberT<M>& c) {
  return {!c.plus, bn_flip_matrix(c.rep)};
}

/// Minimal gallery from x to y: chambers C_0 = x, ..., C_k = y with
/// consecutive distances the letters of a reduced word for delta(x, y).
/// Throws DifferentComponents when the distance is infinite.
std::vector<Chamber> gallery(const Chamber& x, const Chamber& y);

/// Twin apartment spanned by a pair of opposite chambers.  `contains`
/// decides membership through the defining distance/codistance identity
/// against the pair; `member` walks codistance raisers along a reduced
/// word, so it never needs a matrix realisation of the apartment.  When
/// a common representative g (with g I^+ = pos and g I^- = neg) can be
/// aligned exactly, it is kept in `base`; the boundary map requires it.
struct TwinApartment {
  Chamber pos;
  Chamber neg;
  std::optional<LoopMatrix> base;

  Chamber positive_base() const { return pos; }
  Chamber negative_base() const { return neg; }
  Chamber member(const AffinePermutation& w, bool plus) const;
  bool contains(const Chamber& d) const;
};

/// Construct the twin apartment through an opposite pair (either argument
/// order); NotOpposite when the codistance is not the identity.
TwinApartment twin_apartment(const Chamber& x, const Chamber& y);

/// The chamber Z in the s-panel of y with codelta(x, Z) = codelta(x, y) * s.
/// When that multiplication raises the length, Z is the unique such chamber
/// in the panel.
Chamber codistance_raiser(const Chamber& x, const Chamber& y, int s);

/// All chambers at distance <= radius from the standard positive (or
/// negative) chamber over F_p, with their labels.  The normal form behind
/// the enumeration yields each chamber exactly once: the cell at w
/// contributes p^length(w) distinct chambers.
template <std::uint32_t P>
std::vector<std::pair<AffinePermutation, FChamber<Fp<P>>>> ball(int n, int radius,
                                                                bool plus = true) {
  std::vector<std::pair<AffinePermutation, FChamber<Fp<P>>>> out;
  for (const AffinePermutation& w : weyl_ball(n, radius)) {
    std::vector<FChamber<Fp<P>>> layer{base_fchamber<Fp<P>>(n, plus)};
    for (int s : w.reduced_word()) {
      std::vector<FChamber<Fp<P>>> next;
      next.reserve(layer.size() * P);
      for (const auto& c : layer)
        for (std::uint32_t v = 0; v < P; ++v) next.push_back(panel_move(c, s, Fp<P>(v)));
      layer = std::move(next);
    }
    for (auto& c : layer) out.emplace_back(w, std::move(c));
  }
  return out;
}

}  // namespace twincity
