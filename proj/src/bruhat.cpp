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

#include "twincity/bruhat.hpp"

#include <cstdlib>
#include <string>

namespace twincity {

int precision_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("TWINCITY_PRECISION_CAP")) {
      int v = std::atoi(env);
      if (v >= 8) return v;
    }
    return 512;
  }();
  return cap;
}

std::vector<std::pair<int, int>> monomial_profile(const AffinePermutation& w) {
  std::vector<std::pair<int, int>> profile(w.n);
  for (int j = 0; j < w.n; ++j) {
    int64_t wj = w.window[j];
    int64_t res = wj % w.n;
    if (res <= 0) res += w.n;  // residue in 1..n
    int row = static_cast<int>(res) - 1;
    int k = static_cast<int>((res - wj) / w.n);
    profile[j] = {row, k};
  }
  return profile;
}

LoopMatrix weyl_to_monomial(const AffinePermutation& w) {
  auto profile = monomial_profile(w);
  LoopMatrix m(w.n);
  for (int j = 0; j < w.n; ++j) {
    GaussQ unit = (j == w.n - 1 && w.sign() < 0) ? -GaussQ::one() : GaussQ::one();
    m.at(profile[j].first, j) =
        RationalFunction::from_laurent(LaurentPoly<GaussQ>::monomial(profile[j].second, unit));
  }
  return m;
}

Mat<Series<GaussQ>> expand_matrix(const LoopMatrix& g, Place p, int hi) {
  Mat<Series<GaussQ>> a(g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      const RationalFunction& f = g.at(i, j);
      if (f.is_zero()) {
        a.at(i, j) = Series<GaussQ>::exact_zero();
        continue;
      }
      int v = f.val(p);
      if (v >= hi) {  // nothing visible inside the window
        Series<GaussQ> s;
        s.hi = hi;
        a.at(i, j) = s;
        continue;
      }
      a.at(i, j) = f.expand(p, hi - v);
    }
  return a;
}

BruhatDecomposition rational_bruhat(const LoopMatrix& g, bool plus) {
  Place place = plus ? Place::at_zero : Place::at_infinity;
  require(analytic_at(g, place), errc::wrong_regularity,
          std::string("matrix has poles on the wrong side of the unit circle for the ") +
              (plus ? "plus" : "minus") + " building");
  const int cap = precision_cap();
  for (int h = 8; h <= cap; h *= 2) {
    try {
      return {h, formal_bruhat(expand_matrix(g, place, h), plus, h)};
    } catch (const insufficient_precision&) {
      if (2 * h > cap) throw;
    }
  }
  fail(errc::insufficient_precision, "precision cap exhausted");
}

BirkhoffDecomposition birkhoff(const LoopMatrix& g) {
  const LoopMatrix aligned = clear_inside_poles(g).cleared;
  const int cap = precision_cap();
  for (int h = 8; h <= cap; h *= 2) {
    try {
      auto elim = formal_birkhoff(expand_matrix(aligned, Place::at_zero, h), h);
      auto right = birkhoff_right_witness(elim, h);
      return {h, std::move(elim), std::move(right)};
    } catch (const insufficient_precision&) {
      if (2 * h > cap) throw;
    }
  }
  fail(errc::insufficient_precision, "precision cap exhausted");
}

namespace {

/// Row profile of a rational matrix at 0: minimal valuation over the
/// nonzero entries and the leftmost column attaining it.
void exact_profile(const LoopMatrix& a, std::vector<int>& mu, std::vector<int>& col) {
  const int n = a.n;
  mu.assign(n, 0);
  col.assign(n, -1);
  for (int r = 0; r < n; ++r) {
    std::optional<int> m;
    for (int c = 0; c < n; ++c) {
      const RationalFunction& f = a.at(r, c);
      if (f.is_zero()) continue;
      int v = f.val(Place::at_zero);
      if (!m || v < *m) m = v;
    }
    require(m.has_value(), errc::determinant_not_one, "zero row, matrix is singular");
    mu[r] = *m;
    for (int c = 0; c < n; ++c) {
      const RationalFunction& f = a.at(r, c);
      if (!f.is_zero() && f.val(Place::at_zero) == *m) {
        col[r] = c;
        break;
      }
    }
  }
}

ExactBirkhoffDecomposition exact_birkhoff_core(const LoopMatrix& g) {
  const int n = g.n;
  LoopMatrix a = g;
  LoopMatrix left = LoopMatrix::identity(n);
  std::vector<int> mu, col;

  exact_profile(a, mu, col);
  long long drift = 0;
  for (int r = 0; r < n; ++r) drift += mu[r];
  const long long max_steps = 4LL * n * n * (1 - drift) + 64;

  for (long long step = 0;; ++step) {
    require(step <= max_steps, errc::non_terminating, "Birkhoff reduction exceeded its iteration cap");
    exact_profile(a, mu, col);
    int cc = -1;
    for (int c = 0; c < n && cc < 0; ++c) {
      int count = 0;
      for (int r = 0; r < n; ++r) count += col[r] == c;
      if (count >= 2) cc = c;
    }
    if (cc < 0) break;
    int ra = -1, rb = -1;
    for (int r = 0; r < n; ++r) {
      if (col[r] != cc) continue;
      if (ra < 0 || std::pair(mu[r], r) < std::pair(mu[ra], ra)) ra = r;
    }
    for (int r = 0; r < n; ++r) {
      if (col[r] != cc || r == ra) continue;
      if (rb < 0 || std::pair(mu[r], r) < std::pair(mu[rb], rb)) rb = r;
    }
    int mod = (mu[ra] < mu[rb]) ? ra : rb;
    int src = (mod == ra) ? rb : ra;
    int bound = mod > src ? 0 : -1;
    const RationalFunction& f = a.at(mod, cc);
    const RationalFunction& h = a.at(src, cc);
    int vf = f.val(Place::at_zero), vh = h.val(Place::at_zero);
    // Quotient coefficients are needed for exponents vf-vh .. bound.
    Series<GaussQ> q =
        f.expand(Place::at_zero, vh + bound + 1 - vf).div(h.expand(Place::at_zero, vh - vf + bound + 1), bound + 1);
    require(q.hi >= bound + 1, errc::internal_error, "exact quotient window too short");
    RationalFunction mult =
        RationalFunction::from_laurent(-(q.known_part().truncated_above(bound)));
    for (int j = 0; j < n; ++j) {
      a.at(mod, j) = a.at(mod, j) + mult * a.at(src, j);
      left.at(mod, j) = left.at(mod, j) + mult * left.at(src, j);
    }
  }

  ExactBirkhoffDecomposition out;
  std::vector<int64_t> window(n);
  for (int r = 0; r < n; ++r)
    window[col[r]] = (r + 1) - static_cast<int64_t>(n) * mu[r];
  out.label = AffinePermutation::make(n, window);

  // Q = M^{-1} * reduced must lie in I^+ exactly; its adjugate is the
  // right witness (det Q = 1 because every other factor has det one).
  auto profile = monomial_profile(out.label);
  LoopMatrix q(n);
  for (int j = 0; j < n; ++j) {
    GaussQ unit =
        (j == n - 1 && out.label.sign() < 0) ? -GaussQ::one() : GaussQ::one();
    for (int c = 0; c < n; ++c)
      q.at(j, c) = a.at(profile[j].first, c).shifted(-profile[j].second).scaled(unit.inverse());
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const RationalFunction& e = q.at(i, j);
      if (e.is_zero()) continue;
      require(e.val(Place::at_zero) >= (i > j ? 1 : 0), errc::internal_error,
              "right cofactor fell outside the positive Iwahori subgroup");
    }
  require(q.det() == RationalFunction::one(), errc::internal_error,
          "right cofactor determinant is not one");
  out.right = q.adjugate();
  out.reduced = a;
  out.left = left;
  return out;
}

/// (t - root)^m as a Laurent polynomial, m >= 0.
LaurentPoly<GaussQ> linear_power(const GaussQ& root, int m) {
  LaurentPoly<GaussQ> lin =
      LaurentPoly<GaussQ>::t() - LaurentPoly<GaussQ>::constant(root);
  LaurentPoly<GaussQ> p = LaurentPoly<GaussQ>::one();
  for (int j = 0; j < m; ++j) p = p * lin;
  return p;
}

GaussQ gq_pow(const GaussQ& a, int m) {
  GaussQ r = GaussQ::one();
  for (int j = 0; j < m; ++j) r = r * a;
  return r;
}

/// f rewritten in the chart zeta = (t - c)/t, i.e. t = c/(1 - zeta).  The
/// chart moves c to 0, 0 to infinity and infinity to 1, so poles of f at c
/// become poles of the result at zeta = 0 (negative Laurent exponents).
RationalFunction to_zeta_chart(const RationalFunction& f, const GaussQ& c) {
  if (f.is_zero()) return RationalFunction::zero();
  auto t_power = [&](int k) {  // t^k = (-c)^k (zeta - 1)^{-k}
    if (k == 0) return RationalFunction::one();
    if (k > 0)
      return RationalFunction::make(
          LaurentPoly<GaussQ>::constant(gq_pow(-c, k)), {{GaussQ::one(), k}});
    return RationalFunction::from_laurent(
        linear_power(GaussQ::one(), -k).scaled(gq_pow((-c).inverse(), -k)));
  };
  RationalFunction out = RationalFunction::zero();
  for (const auto& [e, a] : f.num.c) out = out + t_power(e).scaled(a);
  const GaussQ minus_one = -GaussQ::one();
  for (const auto& [a, m] : f.den) {
    if (a == c) {
      // (t - c)^{-m} = (1 - zeta)^m (c zeta)^{-m}
      out = out * RationalFunction::from_laurent(
                      linear_power(GaussQ::one(), m)
                          .scaled(gq_pow(minus_one, m) * gq_pow(c.inverse(), m))
                          .shifted(-m));
    } else {
      // (t - a)^{-m} = (1 - zeta)^m a^{-m} (zeta - rho)^{-m}, rho = (a-c)/a
      out = out * RationalFunction::make(
                      linear_power(GaussQ::one(), m)
                          .scaled(gq_pow(minus_one, m) * gq_pow(a.inverse(), m)),
                      {{(a - c) / a, m}});
    }
  }
  return out;
}

/// p(zeta) pulled back along zeta = (t - c)/t: zeta^k = (t - c)^k t^{-k}, an
/// exact rational function of t whose poles sit at 0 (k > 0) or c (k < 0).
RationalFunction from_zeta_chart(const LaurentPoly<GaussQ>& p, const GaussQ& c) {
  RationalFunction out = RationalFunction::zero();
  for (const auto& [k, a] : p.c) {
    RationalFunction zk =
        k >= 0 ? RationalFunction::from_laurent(linear_power(c, k).shifted(-k))
               : RationalFunction::make(
                     LaurentPoly<GaussQ>::monomial(-k, GaussQ::one()), {{c, -k}});
    out = out + zk.scaled(a);
  }
  return out;
}

}  // namespace

InsidePoleClearing clear_inside_poles(const LoopMatrix& g) {
  const int n = g.n;
  InsidePoleClearing out{LoopMatrix::identity(n), g};
  for (;;) {
    // Deepest-priority pole inside the punctured disk, picked by a total
    // order (norm, then coordinates) so runs are deterministic.
    std::optional<GaussQ> c;
    auto better = [](const GaussQ& x, const GaussQ& y) {
      int s = cmp(x.norm2(), y.norm2());
      return s != 0 ? s < 0 : x < y;
    };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (const auto& [root, order] : out.cleared.at(i, j).den)
          if (root.norm2() < 1 && (!c || better(root, *c))) c = root;
    if (!c) break;

    // Eliminate in the chart zeta = (t - c)/t, where the pole sits at the
    // origin and the admissible correctors are Laurent-polynomial loops:
    // with m the label monomial of the chart matrix X and L its left
    // witness, m^{-1} L X is regular at zeta = 0 by the profile bound, and
    // m^{-1} L is Laurent in zeta, hence rational in t with poles only at
    // 0 and c -- both inside the disk, so the corrector is negative-Iwahori
    // once its value at infinity (zeta = 1) is normalized away.
    LoopMatrix chart(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        chart.at(i, j) = to_zeta_chart(out.cleared.at(i, j), *c);
    ExactBirkhoffDecomposition eb = exact_birkhoff_core(chart);
    LoopMatrix unit = weyl_to_monomial(eb.label).adjugate() * eb.left;
    LoopMatrix step(n), at_one(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const RationalFunction& e = unit.at(i, j);
        require(e.den.empty(), errc::internal_error,
                "pole corrector is not Laurent in the chart");
        step.at(i, j) = from_zeta_chart(e.num, *c);
        at_one.at(i, j) = RationalFunction::constant(
            e.is_zero() ? GaussQ::zero() : e.num.eval(GaussQ::one()));
      }
    require(at_one.det() == RationalFunction::one(), errc::internal_error,
            "pole corrector does not normalize at infinity");
    step = at_one.adjugate() * step;
    out.aligner = step * out.aligner;
    out.cleared = step * out.cleared;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        require(out.cleared.at(i, j).den.count(*c) == 0, errc::internal_error,
                "pole clearing left a pole behind");
  }
  return out;
}

ExactBirkhoffDecomposition exact_birkhoff(const LoopMatrix& g) {
  InsidePoleClearing cl = clear_inside_poles(g);
  ExactBirkhoffDecomposition out = exact_birkhoff_core(cl.cleared);
  out.left = out.left * cl.aligner;
  return out;
}

}  // namespace twincity
