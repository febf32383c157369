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

#include <map>
#include <string>

#include "twincity/errors.hpp"
#include "twincity/laurent.hpp"
#include "twincity/scalar.hpp"
#include "twincity/series.hpp"

namespace twincity {

/// Place of expansion for valuations and series.
enum class Place { at_zero, at_infinity };

inline const char* place_name(Place p) {
  return p == Place::at_zero ? "at_zero" : "at_infinity";
}

/// Rational function over the Gaussian rationals, kept in the normal form
///
///     num(t) / prod_{c} (t - c)^{m_c},        c != 0,
///
/// where num is a Laurent polynomial sharing no root with the denominator
/// (each (t - c) is cancelled by exact evaluation + synthetic division, so
/// no polynomial factorization is ever needed).  The factored denominator
/// IS the pole profile: pole locations and orders are read off directly,
/// and pole moduli squared are exact rationals.
struct RationalFunction {
  LaurentPoly<GaussQ> num;
  std::map<GaussQ, int> den;  // root -> multiplicity, every root nonzero

  RationalFunction() = default;

  static RationalFunction zero() { return RationalFunction(); }
  static RationalFunction one() { return from_laurent(LaurentPoly<GaussQ>::one()); }
  static RationalFunction t() { return from_laurent(LaurentPoly<GaussQ>::t()); }
  static RationalFunction constant(const GaussQ& a) {
    return from_laurent(LaurentPoly<GaussQ>::constant(a));
  }

  static RationalFunction from_laurent(const LaurentPoly<GaussQ>& p) {
    RationalFunction r;
    r.num = p;
    return r;
  }

  /// Build num / prod (t - root)^order and reduce.  Roots must be nonzero.
  static RationalFunction make(const LaurentPoly<GaussQ>& numerator,
                               const std::map<GaussQ, int>& roots) {
    RationalFunction r;
    r.num = numerator;
    for (const auto& [root, order] : roots) {
      require(!root.is_zero(), errc::parse_error,
              "denominator root at t = 0 (fold it into the Laurent numerator)");
      require(order > 0, errc::parse_error, "nonpositive denominator multiplicity");
      r.den[root] += order;
    }
    r.reduce();
    return r;
  }

  bool is_zero() const { return num.is_zero(); }

  /// Cancel common linear factors by evaluation, and normalize zero.
  void reduce() {
    if (num.is_zero()) {
      den.clear();
      return;
    }
    for (auto it = den.begin(); it != den.end();) {
      while (it->second > 0 && num.eval(it->first).is_zero()) {
        num = num.divide_linear(it->first);
        --it->second;
        if (num.is_zero()) {  // cannot happen for a genuine zero of num, but stay safe
          den.clear();
          return;
        }
      }
      it = it->second == 0 ? den.erase(it) : std::next(it);
    }
  }

  /// Denominator as an explicit monic polynomial.
  LaurentPoly<GaussQ> den_poly() const {
    LaurentPoly<GaussQ> d = LaurentPoly<GaussQ>::one();
    for (const auto& [root, order] : den) {
      LaurentPoly<GaussQ> lin = LaurentPoly<GaussQ>::t() - LaurentPoly<GaussQ>::constant(root);
      for (int k = 0; k < order; ++k) d = d * lin;
    }
    return d;
  }
  int den_degree() const {
    int d = 0;
    for (const auto& [root, order] : den) d += order;
    return d;
  }

  /// Order of vanishing at a place (den roots avoid both places).
  int val(Place p) const {
    require(!is_zero(), errc::zero_input, "valuation of the zero function");
    if (p == Place::at_zero) return num.v0();
    return den_degree() - num.max_exp();
  }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num = -r.num;
    return r;
  }

  RationalFunction operator*(const RationalFunction& o) const {
    RationalFunction r;
    r.num = num * o.num;
    r.den = den;
    for (const auto& [root, order] : o.den) r.den[root] += order;
    r.reduce();
    return r;
  }

  RationalFunction scaled(const GaussQ& a) const {
    RationalFunction r = *this;
    r.num = r.num.scaled(a);
    if (r.num.is_zero()) r.den.clear();
    return r;
  }
  RationalFunction shifted(int k) const {  // multiply by t^k
    RationalFunction r = *this;
    r.num = r.num.shifted(k);
    return r;
  }

  RationalFunction operator+(const RationalFunction& o) const {
    // Least common denominator: per root the max multiplicity.
    RationalFunction r;
    std::map<GaussQ, int> lcm = den;
    for (const auto& [root, order] : o.den) {
      auto it = lcm.find(root);
      if (it == lcm.end())
        lcm.emplace(root, order);
      else if (it->second < order)
        it->second = order;
    }
    auto cofactor = [&](const std::map<GaussQ, int>& mine) {
      LaurentPoly<GaussQ> co = LaurentPoly<GaussQ>::one();
      for (const auto& [root, order] : lcm) {
        int missing = order;
        auto it = mine.find(root);
        if (it != mine.end()) missing -= it->second;
        LaurentPoly<GaussQ> lin =
            LaurentPoly<GaussQ>::t() - LaurentPoly<GaussQ>::constant(root);
        for (int k = 0; k < missing; ++k) co = co * lin;
      }
      return co;
    };
    r.num = num * cofactor(den) + o.num * cofactor(o.den);
    r.den = lcm;
    r.reduce();
    return r;
  }
  RationalFunction operator-(const RationalFunction& o) const { return *this + (-o); }

  bool operator==(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
    return (*this - o).is_zero();
  }

  /// Substitute t -> 1/t.  Pole at c becomes a pole at 1/c.
  RationalFunction flipped() const {
    if (is_zero()) return zero();
    RationalFunction r;
    r.num = num.flipped();
    GaussQ unit = GaussQ::one();
    int total = 0;
    for (const auto& [root, order] : den) {
      total += order;
      GaussQ f = -root;
      for (int k = 0; k < order; ++k) unit = unit * f;
      r.den[root.inverse()] += order;
    }
    // 1/(1/t - c)^m = t^m * (-c)^{-m} * (t - 1/c)^{-m}
    r.num = r.num.shifted(total).scaled(unit.inverse());
    r.reduce();
    return r;
  }

  /// Exact truncated expansion at the place, N coefficients starting at the
  /// valuation (empty window for the zero function).
  Series<GaussQ> expand(Place p, int N) const {
    require(N >= 0, errc::parse_error, "negative precision");
    if (is_zero()) return Series<GaussQ>::exact_zero();
    int v = val(p);
    if (p == Place::at_zero) {
      auto fn = Series<GaussQ>::from_laurent(num);
      auto fd = Series<GaussQ>::from_laurent(den_poly());
      return fn.div(fd, v + N);
    }
    // Work in s = 1/t: num(1/t) and den(1/t) are Laurent polynomials in s.
    auto fn = Series<GaussQ>::from_laurent(num.flipped());
    auto fd = Series<GaussQ>::from_laurent(den_poly().flipped());
    return fn.div(fd, v + N);
  }

  std::string str() const {
    if (den.empty()) return num.str();
    std::string s = "(" + num.str() + ") / (" + den_poly().str() + ")";
    return s;
  }
};

/// Result of factoring an expanded denominator polynomial:
///
///     d(t) = scale * t^shift * prod_{root} (t - root)^order
///
/// with every root a nonzero Gaussian rational.
struct SplitDenominator {
  int shift = 0;
  GaussQ scale;
  std::map<GaussQ, int> roots;
};

/// Factor an expanded denominator into Gaussian-rational linear factors.
/// Candidate roots come from divisor enumeration over the Gaussian integers
/// (rational-root bound on the cleared-denominator polynomial), so the search
/// is exact and bounded.  Throws NonSplitDenominator when the polynomial has
/// an irreducible factor of degree >= 2 over Q(i) (e.g. t^2 - 2), ZeroInput
/// for the zero polynomial, and ParseError when the coefficients are too
/// large for the divisor search bound.
SplitDenominator split_denominator(const LaurentPoly<GaussQ>& d);

/// Quotient num / den with an expanded-polynomial denominator, reduced to
/// the factored normal form via split_denominator.
RationalFunction make_quotient(const LaurentPoly<GaussQ>& num,
                               const LaurentPoly<GaussQ>& den);

}  // namespace twincity
