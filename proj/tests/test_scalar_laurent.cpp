#include <doctest.h>

#include "twincity/errors.hpp"
#include "twincity/laurent.hpp"
#include "twincity/scalar.hpp"

#include "test_util.hpp"

using namespace twincity;
using testutil::gq;

using LP = LaurentPoly<GaussQ>;

TEST_CASE("prime field arithmetic") {
  CHECK(Fp<2>::one() + Fp<2>::one() == Fp<2>::zero());
  CHECK(Fp<2>(3) == Fp<2>::one());
  CHECK(Fp<3>(-1) == Fp<3>(2));
  CHECK(Fp<3>(2) * Fp<3>(2) == Fp<3>::one());
  CHECK(Fp<3>(2).inverse() == Fp<3>(2));
  CHECK(Fp<3>::one() / Fp<3>(2) == Fp<3>(2));
  CHECK(Fp<5>(4).inverse() == Fp<5>(4));
  CHECK_THROWS_AS(Fp<2>::zero().inverse(), kernel_error);
}

TEST_CASE("rational scalar wrapper") {
  Rational half(mpq_class(1, 2));
  CHECK(half + half == Rational::one());
  CHECK(half.inverse() == Rational(mpq_class(2)));
  CHECK((half - half).is_zero());
  CHECK(half.str() == "1/2");
  CHECK_THROWS_AS(Rational::zero().inverse(), kernel_error);
}

TEST_CASE("Gaussian rational field laws") {
  CHECK(GaussQ::i() * GaussQ::i() == -GaussQ::one());
  GaussQ a(mpq_class(3, 5), mpq_class(4, 5));
  CHECK(a.norm2() == mpq_class(1));
  CHECK(a * a.conj() == GaussQ(a.norm2(), mpq_class(0)));
  CHECK(a * a.inverse() == GaussQ::one());
  CHECK(a.inverse() == a.conj());  // unit modulus
  CHECK(gq(2).str() == "2");
  CHECK(GaussQ(mpq_class(1, 2), mpq_class(-1, 3)).str() == "(1/2-1/3i)");
  CHECK(gq(-1, 3) < gq(1, 2));
  CHECK_THROWS_AS(GaussQ::zero().inverse(), kernel_error);
}

TEST_CASE("Laurent polynomial ring operations") {
  LP one = LP::one();
  LP t = LP::t();
  LP p = one + t;         // 1 + t
  LP q = one - t;         // 1 - t
  LP prod = p * q;        // 1 - t^2
  CHECK(prod.coeff(0) == GaussQ::one());
  CHECK(prod.coeff(1) == GaussQ::zero());
  CHECK(prod.coeff(2) == -GaussQ::one());
  CHECK(prod.v0() == 0);
  CHECK(prod.max_exp() == 2);

  LP m = LP::monomial(-3, gq(2));
  CHECK(m.v0() == -3);
  CHECK(m.vinf() == 3);
  CHECK(m.shifted(5) == LP::monomial(2, gq(2)));
  CHECK(m.scaled(gq(1, 2)) == LP::monomial(-3, GaussQ::one()));
  CHECK(m.flipped() == LP::monomial(3, gq(2)));
}

TEST_CASE("Laurent cancellation and evaluation") {
  LP p = LP::t();
  p.add_term(1, -GaussQ::one());
  CHECK(p.is_zero());
  CHECK_THROWS_AS(p.v0(), kernel_error);
  CHECK_THROWS_AS(p.vinf(), kernel_error);

  LP q = LP::one() + LP::t();  // 1 + t
  CHECK(q.eval(gq(2)) == gq(3));
  LP inv = LP::monomial(-1, GaussQ::one());  // t^-1
  CHECK(inv.eval(gq(2)) == gq(1, 2));
}

TEST_CASE("Laurent linear division and truncation") {
  LP sq = LP::monomial(2, GaussQ::one()) - LP::one();  // t^2 - 1
  CHECK(sq.divide_linear(GaussQ::one()) == LP::t() + LP::one());
  CHECK(sq.divide_linear(-GaussQ::one()) == LP::t() - LP::one());

  LP mix = LP::monomial(-1, GaussQ::one()) + LP::one() + LP::monomial(2, gq(5));
  LP cut = mix.truncated_above(0);
  CHECK(cut == LP::monomial(-1, GaussQ::one()) + LP::one());
  CHECK(mix.truncated_above(-2).is_zero());
}
