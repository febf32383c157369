#include <doctest.h>

#include <map>
#include <vector>

#include "twincity/building.hpp"
#include "twincity/errors.hpp"

#include "test_util.hpp"

using namespace twincity;
using testutil::gq;
using testutil::mat;
using testutil::perm;
using testutil::pole;

namespace {

Chamber monomial_chamber(bool plus, const AffinePermutation& w) {
  return make_chamber(plus, weyl_to_monomial(w));
}

}  // namespace

TEST_CASE("Weyl distance on monomial chambers is the group quotient") {
  for (const AffinePermutation& u : weyl_ball(2, 3))
    for (const AffinePermutation& v : weyl_ball(2, 3)) {
      DistanceValue d = delta(monomial_chamber(true, u), monomial_chamber(true, v));
      REQUIRE(d.w.has_value());
      CHECK(*d.w == u.inverse().multiply(v));
    }
  CHECK(delta(base_chamber(3, false), base_chamber(3, false)).w ==
        AffinePermutation::identity(3));
}

TEST_CASE("distance is infinite across components and guarded across signs") {
  Chamber x = base_chamber(2, true);
  LoopMatrix h = LoopMatrix::identity(2);
  h.at(0, 1) = pole(gq(1, 3));
  Chamber y = make_chamber(true, h);
  CHECK(delta(x, y) == DistanceValue::infinite());
  CHECK(delta(x, y).str() == "infinite");

  try {
    delta(x, base_chamber(2, false));
    FAIL("expected SignMismatch");
  } catch (const kernel_error& e) {
    CHECK(e.code() == errc::sign_mismatch);
  }
  CHECK_THROWS_AS(codelta(x, x), kernel_error);
}

TEST_CASE("codistance anchors and symmetry") {
  Chamber xp = base_chamber(2, true);
  Chamber xm = base_chamber(2, false);
  CHECK(codelta(xp, xm).is_identity());
  CHECK(is_opposite(xp, xm));
  CHECK(is_opposite(xm, xp));

  Chamber ym = monomial_chamber(false, perm(2, {0, 3}));
  CHECK(!is_opposite(xp, ym));
  CHECK(codelta(xp, ym) == codelta(ym, xp).inverse());

  for (const AffinePermutation& w : weyl_ball(2, 2)) {
    Chamber c = monomial_chamber(false, w);
    CHECK(codelta(xp, c) == codelta(c, xp).inverse());
  }
}

TEST_CASE("chamber equality is the Iwahori coset relation") {
  Chamber x = base_chamber(2, true);
  CHECK(chambers_equal(x, make_chamber(true, mat(R"([[1,[[1,1]]],[0,1]])"))));
  CHECK(chambers_equal(x, make_chamber(true, mat(R"([[1,0],[[[1,1]],1]])"))));
  CHECK(!chambers_equal(x, monomial_chamber(true, perm(2, {2, 1}))));
  CHECK(!chambers_equal(x, make_chamber(true, mat(R"([[1,0],[1,1]])"))));
}

TEST_CASE("Iwahori membership by valuation profile") {
  CHECK(in_iwahori(LoopMatrix::identity(2), true));
  CHECK(in_iwahori(LoopMatrix::identity(2), false));
  CHECK(in_iwahori(mat(R"([[1,[[1,1]]],[0,1]])"), true));
  CHECK(!in_iwahori(mat(R"([[1,[[-1,1]]],[0,1]])"), true));
  CHECK(in_iwahori(mat(R"([[1,0],[[[1,1]],1]])"), true));
  CHECK(!in_iwahori(mat(R"([[1,0],[1,1]])"), true));
  CHECK(in_iwahori(mat(R"([[1,0],[1,1]])"), false));
  CHECK(in_iwahori(mat(R"([[1,[[-1,1]]],[0,1]])"), false));

  LoopMatrix inner = LoopMatrix::identity(2);
  inner.at(1, 0) = pole(gq(1, 3));  // analytic at infinity, pole inside
  CHECK(in_iwahori(inner, false));
  CHECK(!in_iwahori(inner, true));
  LoopMatrix outer = LoopMatrix::identity(2);
  outer.at(0, 1) = pole(gq(2));  // analytic at zero, pole outside
  CHECK(in_iwahori(outer, true));
  CHECK(!in_iwahori(outer, false));
}

TEST_CASE("panel moves step across one panel") {
  Chamber x = base_chamber(2, true);
  for (int s : {0, 1}) {
    Chamber y = panel_move(x, s, GaussQ::zero());
    DistanceValue d = delta(x, y);
    CHECK(d.w == AffinePermutation::simple(2, s));
    Chamber z = panel_move(x, s, gq(1));
    CHECK(!chambers_equal(y, z));
    CHECK(delta(y, z).w == AffinePermutation::simple(2, s));
  }
}

TEST_CASE("galleries realize reduced words") {
  Chamber x = base_chamber(2, true);
  CHECK(gallery(x, x).size() == 1);

  Chamber step = monomial_chamber(true, perm(2, {2, 1}));
  CHECK(gallery(x, step).size() == 2);

  Chamber far = monomial_chamber(true, perm(2, {3, 0}));
  std::vector<Chamber> g = gallery(x, far);
  REQUIRE(g.size() == 3);
  CHECK(chambers_equal(g.front(), x));
  CHECK(chambers_equal(g.back(), far));
  std::vector<int> word = perm(2, {3, 0}).reduced_word();
  for (size_t k = 0; k + 1 < g.size(); ++k)
    CHECK(delta(g[k], g[k + 1]).w == AffinePermutation::simple(2, word[k]));

  LoopMatrix h = LoopMatrix::identity(2);
  h.at(0, 1) = pole(gq(1, 3));
  try {
    gallery(x, make_chamber(true, h));
    FAIL("expected DifferentComponents");
  } catch (const kernel_error& e) {
    CHECK(e.code() == errc::different_components);
  }
}

TEST_CASE("chamber balls grow by the panel order") {
  auto b = ball<2>(2, 2);
  std::map<std::vector<std::int64_t>, int> sizes;
  for (const auto& [w, c] : b) sizes[w.window] += 1;
  CHECK(sizes[{1, 2}] == 1);
  CHECK(sizes[{0, 3}] == 2);
  CHECK(sizes[{2, 1}] == 2);
  CHECK(sizes[{3, 0}] == 4);
  CHECK(sizes[{-1, 4}] == 4);
  CHECK(b.size() == 13);

  auto b3 = ball<3>(2, 1);
  CHECK(b3.size() == 1 + 3 + 3);
}

TEST_CASE("the flip exchanges the two standard chambers") {
  Chamber xp = base_chamber(2, true);
  Chamber flipped = bn_flip(xp);
  CHECK(!flipped.plus);
  CHECK(chambers_equal(flipped, base_chamber(2, false)));
  Chamber c = monomial_chamber(true, perm(2, {3, 0}));
  CHECK(bn_flip(bn_flip(c)).rep == c.rep);
  CHECK(bn_flip(bn_flip(c)).plus == c.plus);

  Chamber d = monomial_chamber(true, perm(2, {2, 1}));
  CHECK(delta(bn_flip(c), bn_flip(d)) == delta(c, d));
}

TEST_CASE("twin apartment through the standard pair") {
  TwinApartment a = twin_apartment(base_chamber(2, true), base_chamber(2, false));
  REQUIRE(a.base.has_value());
  CHECK(chambers_equal(a.member(AffinePermutation::identity(2), true), a.pos));
  CHECK(chambers_equal(a.member(AffinePermutation::identity(2), false), a.neg));

  Chamber m = a.member(perm(2, {3, 0}), true);
  CHECK(chambers_equal(m, make_chamber(true, mat(R"([[[[-1,1]],0],[0,[[1,1]]]])"))));
  CHECK(a.contains(m));
  CHECK(!a.contains(panel_move(m, 0, gq(5))));

  try {
    twin_apartment(base_chamber(2, true), monomial_chamber(false, perm(2, {0, 3})));
    FAIL("expected NotOpposite");
  } catch (const kernel_error& e) {
    CHECK(e.code() == errc::not_opposite);
  }
}

TEST_CASE("codistance raisers climb one letter at a time") {
  Chamber x = base_chamber(2, true);
  Chamber y = base_chamber(2, false);
  Chamber z = codistance_raiser(x, y, 0);
  CHECK(codelta(x, z) == AffinePermutation::simple(2, 0));
  Chamber z2 = codistance_raiser(x, z, 1);
  CHECK(codelta(x, z2) == perm(2, {0, 3}).multiply(AffinePermutation::simple(2, 1)));
}
