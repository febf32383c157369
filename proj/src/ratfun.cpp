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

#include "twincity/ratfun.hpp"

#include <set>
#include <vector>

namespace twincity {
namespace {

/// Gaussian integer a + b*i with arbitrary-precision components.
struct Zi {
  mpz_class a, b;
};

mpz_class zi_norm(const Zi& z) { return z.a * z.a + z.b * z.b; }

/// Exact divisibility in Z[i]: z / d = z * conj(d) / norm(d) must have
/// both components integral.
bool zi_divides(const Zi& d, const Zi& z) {
  mpz_class n = zi_norm(d);
  mpz_class ra = z.a * d.a + z.b * d.b;
  mpz_class rb = z.b * d.a - z.a * d.b;
  return ra % n == 0 && rb % n == 0;
}

/// All divisors of a nonzero Gaussian integer, one representative per unit
/// class (the quadrant a >= 0, b >= 0 meets every associate class).  The
/// search radius is the norm's square root, so the norm is capped to keep
/// the enumeration exact but bounded.
std::vector<Zi> zi_divisors(const Zi& z) {
  mpz_class N = zi_norm(z);
  require(sgn(N) != 0, errc::internal_error, "divisor enumeration of zero");
  require(N <= 4000000, errc::parse_error,
          "denominator coefficients too large for exact root search");
  long A = mpz_class(sqrt(N)).get_si();
  std::vector<Zi> out;
  for (long a = 0; a <= A; ++a) {
    for (long b = 0; b <= A; ++b) {
      if (a == 0 && b == 0) continue;
      Zi d{a, b};
      mpz_class nd = zi_norm(d);
      if (N % nd != 0) continue;
      if (zi_divides(d, z)) out.push_back(d);
    }
  }
  return out;
}

GaussQ zi_to_gauss(const Zi& z) {
  return GaussQ(mpq_class(z.a), mpq_class(z.b));
}

}  // namespace

SplitDenominator split_denominator(const LaurentPoly<GaussQ>& d) {
  require(!d.is_zero(), errc::zero_input, "zero denominator");
  SplitDenominator out;
  out.shift = d.v0();
  LaurentPoly<GaussQ> cur = d.shifted(-out.shift);
  if (cur.max_exp() == 0) {
    out.scale = cur.coeff(0);
    return out;
  }

  // Clear the coefficient denominators: L * cur has Gaussian-integer
  // coefficients, to which the rational-root bound applies.
  mpz_class L = 1;
  for (const auto& [e, a] : cur.c) {
    L = lcm(L, a.re.get_den());
    L = lcm(L, a.im.get_den());
  }
  auto zi_at = [&](int e) {
    GaussQ a = cur.coeff(e);
    mpq_class ra = a.re * mpq_class(L);
    mpq_class ia = a.im * mpq_class(L);
    return Zi{ra.get_num(), ia.get_num()};
  };

  // Any Gaussian-rational root u/w (lowest terms) has u dividing the
  // constant term and w dividing the leading term, up to units.
  std::vector<Zi> us = zi_divisors(zi_at(0));
  std::vector<Zi> ws = zi_divisors(zi_at(cur.max_exp()));
  const GaussQ units[4] = {GaussQ::one(), GaussQ::i(), -GaussQ::one(), -GaussQ::i()};
  std::set<GaussQ> candidates;
  for (const Zi& u : us) {
    for (const Zi& w : ws) {
      GaussQ base = zi_to_gauss(u) / zi_to_gauss(w);
      for (const GaussQ& unit : units) candidates.insert(base * unit);
    }
  }

  // Peel linear factors by evaluation + synthetic division.  Every root of
  // a quotient is a root of the original, so one candidate set suffices.
  while (cur.max_exp() >= 1) {
    bool found = false;
    for (const GaussQ& c : candidates) {
      if (cur.eval(c).is_zero()) {
        ++out.roots[c];
        cur = cur.divide_linear(c);
        found = true;
        break;
      }
    }
    require(found, errc::non_split_denominator,
            "denominator has an irreducible factor of degree >= 2 over Q(i)");
  }
  out.scale = cur.coeff(0);
  return out;
}

RationalFunction make_quotient(const LaurentPoly<GaussQ>& num,
                               const LaurentPoly<GaussQ>& den) {
  SplitDenominator f = split_denominator(den);
  return RationalFunction::make(num.shifted(-f.shift).scaled(f.scale.inverse()),
                                f.roots);
}

}  // namespace twincity
