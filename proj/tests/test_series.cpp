#include <doctest.h>

#include "twincity/errors.hpp"
#include "twincity/series.hpp"

#include "test_util.hpp"

using namespace twincity;
using testutil::gq;

using LP = LaurentPoly<GaussQ>;
using S = Series<GaussQ>;

namespace {

std::optional<GaussQ> known(const S& s, int e) { return s.coeff(e); }

}  // namespace

TEST_CASE("series knowledge window") {
  LP p = LP::one() + LP::t() + LP::monomial(2, GaussQ::one());
  S exact = S::from_laurent(p);
  CHECK(exact.exact());
  CHECK(exact.known_part() == p);

  S cut = S::from_laurent(p, 2);  // coefficients below exponent 2 are known
  CHECK(known(cut, 0) == GaussQ::one());
  CHECK(known(cut, 1) == GaussQ::one());
  CHECK(!known(cut, 2).has_value());
  CHECK(known(cut, -5) == GaussQ::zero());
}

TEST_CASE("series ring operations track precision") {
  S p = S::from_laurent(LP::one() + LP::t(), 3);
  S q = S::from_laurent(LP::one() - LP::t(), 3);
  S prod = p * q;  // 1 - t^2 on the common window
  CHECK(known(prod, 0) == GaussQ::one());
  CHECK(known(prod, 1) == GaussQ::zero());
  CHECK(known(prod, 2) == -GaussQ::one());
  CHECK(!known(prod, 3).has_value());

  S sum = p + q;
  CHECK(known(sum, 0) == gq(2));
  CHECK(known(sum, 1) == GaussQ::zero());
  // A windowed difference is zero as far as it is known, but only an exact
  // series can certify vanishing outright.
  CHECK(!(p - p).val().has_value());
  CHECK(!(p - p).known_zero());
  CHECK((S::one() - S::one()).known_zero());
}

TEST_CASE("series division expands geometric series") {
  S num = S::one();
  S den = S::from_laurent(LP::one() - LP::t());
  S q = num.div(den, 5);  // 1 + t + t^2 + t^3 + t^4
  for (int e = 0; e < 5; ++e) CHECK(known(q, e) == GaussQ::one());
  CHECK(!known(q, 5).has_value());
  CHECK(q.val() == 0);
}

TEST_CASE("series division needs a visible divisor valuation") {
  S hidden;   // zero coefficients known only below exponent 2
  hidden.hi = 2;
  CHECK(!hidden.val().has_value());
  CHECK_THROWS_AS(S::one().div(hidden, 4), insufficient_precision);
}

TEST_CASE("series agreement compares only shared coefficients") {
  S a = S::from_laurent(LP::one() + LP::t(), 2);
  S b = S::from_laurent(LP::one() + LP::t() + LP::monomial(2, gq(7)));
  CHECK(a.agrees(b));
  S c = S::from_laurent(LP::one() + LP::monomial(1, gq(2)));
  CHECK(!a.agrees(c));
}

TEST_CASE("series monomials and valuation") {
  S m = S::monomial(-2, gq(3));
  CHECK(m.val() == -2);
  CHECK(known(m, -2) == gq(3));
  CHECK(S::exact_zero().known_zero());
  CHECK(!S::exact_zero().val().has_value());
}
