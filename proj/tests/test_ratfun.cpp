#include <doctest.h>

#include "twincity/errors.hpp"
#include "twincity/ratfun.hpp"

#include "test_util.hpp"

using namespace twincity;
using testutil::gq;
using testutil::pole;

using LP = LaurentPoly<GaussQ>;
using RF = RationalFunction;

TEST_CASE("construction reduces common linear factors") {
  LP tm2 = LP::t() - LP::constant(gq(2));
  RF r = RF::make(tm2, {{gq(2), 1}});
  CHECK(r == RF::one());
  CHECK(r.den.empty());

  RF s = RF::make(tm2 * tm2, {{gq(2), 1}});
  CHECK(s == RF::from_laurent(tm2));
}

TEST_CASE("denominator polynomial and degree") {
  RF r = pole(gq(2), 2);
  LP expect = (LP::t() - LP::constant(gq(2))) * (LP::t() - LP::constant(gq(2)));
  CHECK(r.den_poly() == expect);
  CHECK(r.den_degree() == 2);
  CHECK(RF::one().den_degree() == 0);
}

TEST_CASE("field laws on mixed elements") {
  RF a = pole(gq(2));
  RF b = RF::t();
  RF c = pole(gq(1, 3));
  CHECK((a + b) - b == a);
  CHECK((a + b) * c == a * c + b * c);
  CHECK(a * RF::one() == a);
  CHECK((a - a).is_zero());
  CHECK(a.scaled(gq(3)).scaled(gq(1, 3)) == a);
  CHECK(a.shifted(2) == a * b * b);
}

TEST_CASE("valuations at the two places") {
  CHECK(RF::t().val(Place::at_zero) == 1);
  CHECK(RF::t().val(Place::at_infinity) == -1);
  RF g = pole(gq(2));  // 1/(t-2): regular nonzero at 0, vanishing at infinity
  CHECK(g.val(Place::at_zero) == 0);
  CHECK(g.val(Place::at_infinity) == 1);
  CHECK_THROWS_AS(RF::zero().val(Place::at_zero), kernel_error);
}

TEST_CASE("expansion of 1/(1-t) at both places") {
  // 1/(1-t) = -1/(t-1)
  RF g = pole(GaussQ::one()).scaled(-GaussQ::one());
  Series<GaussQ> at0 = g.expand(Place::at_zero, 3);
  CHECK(at0.coeff(0) == GaussQ::one());
  CHECK(at0.coeff(1) == GaussQ::one());
  CHECK(at0.coeff(2) == GaussQ::one());
  CHECK(!at0.coeff(3).has_value());

  // At infinity the series variable is s = 1/t: -t^-1 - t^-2 - ...
  Series<GaussQ> atinf = g.expand(Place::at_infinity, 2);
  CHECK(atinf.coeff(0) == GaussQ::zero());
  CHECK(atinf.coeff(1) == -GaussQ::one());
  CHECK(atinf.coeff(2) == -GaussQ::one());
  CHECK(!atinf.coeff(3).has_value());
}

TEST_CASE("flip swaps the places") {
  RF g = pole(gq(2));
  RF f = g.flipped();
  CHECK(f.den.count(gq(1, 2)) == 1);
  CHECK(f.flipped() == g);
  CHECK(RF::t().flipped() == RF::from_laurent(LP::monomial(-1, GaussQ::one())));
  for (Place p : {Place::at_zero, Place::at_infinity}) {
    Place q = p == Place::at_zero ? Place::at_infinity : Place::at_zero;
    CHECK(g.val(p) == f.val(q));
  }
}

TEST_CASE("quotients split over the Gaussian rationals") {
  // t^2 + 1 = (t - i)(t + i)
  LP d = LP::monomial(2, GaussQ::one()) + LP::one();
  RF g = make_quotient(LP::one(), d);
  CHECK(g.den.count(GaussQ::i()) == 1);
  CHECK(g.den.count(-GaussQ::i()) == 1);

  // t^2 - 3t + 2 = (t - 1)(t - 2)
  SplitDenominator sp = split_denominator(
      LP::monomial(2, GaussQ::one()) - LP::monomial(1, gq(3)) + LP::constant(gq(2)));
  CHECK(sp.shift == 0);
  CHECK(sp.scale == GaussQ::one());
  CHECK(sp.roots == std::map<GaussQ, int>{{GaussQ::one(), 1}, {gq(2), 1}});

  // Monomial factors become plain shifts, not denominator roots.
  RF m = make_quotient(LP::one(), LP::monomial(2, GaussQ::one()));
  CHECK(m == RF::from_laurent(LP::monomial(-2, GaussQ::one())));
  CHECK(m.den.empty());
}

TEST_CASE("irreducible quadratics are rejected") {
  LP d = LP::monomial(2, GaussQ::one()) - LP::constant(gq(2));  // t^2 - 2
  try {
    make_quotient(LP::one(), d);
    FAIL("expected NonSplitDenominator");
  } catch (const kernel_error& e) {
    CHECK(e.code() == errc::non_split_denominator);
  }
  CHECK_THROWS_AS(split_denominator(LP::zero()), kernel_error);
}
