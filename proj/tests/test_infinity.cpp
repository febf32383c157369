#include <doctest.h>

#include <vector>

#include "twincity/building.hpp"
#include "twincity/errors.hpp"
#include "twincity/infinity.hpp"

#include "test_util.hpp"

using namespace twincity;
using testutil::gq;
using testutil::mat;
using testutil::perm;
using testutil::pole;

namespace {

Flag coord(int n, const AffinePermutation& u) { return coordinate_flag(n, u); }

AffinePermutation shorter_of(const AffinePermutation& w, const AffinePermutation& ws) {
  return ws.length() < w.length() ? ws : w;
}

}  // namespace

TEST_CASE("finite permutations enumerate the spherical Weyl group") {
  CHECK(finite_permutations(2).size() == 2);
  std::vector<AffinePermutation> s3 = finite_permutations(3);
  CHECK(s3.size() == 6);
  for (const AffinePermutation& u : s3) CHECK(u.is_finite());
}

TEST_CASE("coordinate flags realize the group quotient") {
  for (const AffinePermutation& u : finite_permutations(3))
    for (const AffinePermutation& v : finite_permutations(3)) {
      CHECK(relative_position(coord(3, u), coord(3, v)) == u.inverse().multiply(v));
      CHECK(flags_equal(coord(3, u), coord(3, v)) == (u == v));
    }
}

TEST_CASE("flags depend only on the filtration of spans") {
  Flag a = make_flag(mat(R"([[1,0],[0,1]])"));
  Flag b = make_flag(mat(R"([[1,0],[5,1]])"));
  CHECK(flags_equal(a, b));
  Flag c = make_flag(mat(R"([[1,5],[0,1]])"));
  CHECK(!flags_equal(a, c));
  CHECK(relative_position(a, c) == AffinePermutation::simple(2, 1));
  CHECK(relative_position(a, a).is_identity());

  LoopMatrix degenerate(2);
  degenerate.at(0, 0) = RationalFunction::one();
  degenerate.at(1, 0) = RationalFunction::one();
  try {
    make_flag(degenerate);
    FAIL("expected DegenerateFlag");
  } catch (const kernel_error& e) {
    CHECK(e.code() == errc::degenerate_flag);
  }
}

TEST_CASE("relative position is inverse-symmetric and translation-invariant") {
  Flag f = make_flag(mat(R"([[1,[[1,1]]],[0,1]])"));
  Flag g = make_flag(mat(R"([[0,1],[-1,0]])"));
  AffinePermutation w = relative_position(f, g);
  CHECK(w.is_finite());
  CHECK(relative_position(g, f) == w.inverse());
}

TEST_CASE("panel members stay in the panel") {
  Flag g = coord(3, AffinePermutation::identity(3));
  Flag f = coord(3, AffinePermutation::finite_w0(3));
  for (int i : {1, 2}) {
    AffinePermutation w = relative_position(f, g);
    AffinePermutation ws = w.multiply(AffinePermutation::simple(3, i));
    for (auto [alpha, beta] : {std::pair{gq(1), gq(0)}, {gq(0), gq(1)}, {gq(1), gq(7)}}) {
      AffinePermutation wp = relative_position(f, panel_member(g, i, alpha, beta));
      CHECK((wp == w || wp == ws));
    }
  }
  CHECK(flags_equal(panel_member(g, 1, gq(1), gq(0)), g));
  CHECK_THROWS_AS(panel_member(g, 1, GaussQ::zero(), GaussQ::zero()), kernel_error);
  CHECK_THROWS_AS(panel_member(g, 3, gq(1), gq(0)), kernel_error);
}

TEST_CASE("panel projections are the gates") {
  // Exhaustive over coordinate flags of rank three.
  for (const AffinePermutation& u : finite_permutations(3))
    for (const AffinePermutation& v : finite_permutations(3))
      for (int i : {1, 2}) {
        Flag f = coord(3, u), g = coord(3, v);
        AffinePermutation w = relative_position(f, g);
        AffinePermutation ws = w.multiply(AffinePermutation::simple(3, i));
        Flag proj = panel_projection(f, g, i);
        CHECK(relative_position(f, proj) == shorter_of(w, ws));
      }

  // A non-coordinate pair keeps the same gate law.
  Flag f = make_flag(mat(R"([[1,[[1,1]]],[0,1]])"));
  Flag g = make_flag(mat(R"([[0,1],[-1,0]])"));
  AffinePermutation w = relative_position(f, g);
  AffinePermutation ws = w.multiply(AffinePermutation::simple(2, 1));
  CHECK(relative_position(f, panel_projection(f, g, 1)) == shorter_of(w, ws));
}

TEST_CASE("sector flags ignore stabilizing twists") {
  LoopMatrix g = mat(R"([[1,[[1,1]]],[0,1]])");
  for (const AffinePermutation& u : finite_permutations(2)) {
    CHECK(flags_equal(sector_to_flag(LoopMatrix::identity(2), u), coord(2, u)));
    Flag s = sector_to_flag(g, u);
    // A central-torus shift of the base does not move the sector class.
    LoopMatrix shift = mat(R"([[[[1,1]],0],[0,[[-1,1]]]])");
    CHECK(flags_equal(s, sector_to_flag(g * shift, u)));
  }
  CHECK_THROWS_AS(sector_to_flag(g, perm(2, {3, 0})), kernel_error);
}

TEST_CASE("boundary pairing accepts shared bases and rejects shears") {
  LoopMatrix id = LoopMatrix::identity(2);
  CHECK(boundary_pair_check(id, id));
  LoopMatrix g = mat(R"([[1,{"num":[[0,1]],"den":[[2,1]]}],[0,1]])");
  CHECK(boundary_pair_check(g, g));
  CHECK(!boundary_pair_check(id, mat(R"([[1,1],[0,1]])")));
  CHECK(!boundary_pair_check(g, g * mat(R"([[1,1],[0,1]])")));
}

TEST_CASE("boundary pairing of twin apartments needs the aligned base") {
  TwinApartment a = twin_apartment(base_chamber(2, true), base_chamber(2, false));
  REQUIRE(a.base.has_value());
  CHECK(boundary_pair_check(a));

  TwinApartment broken = a;
  broken.base.reset();
  try {
    boundary_pair_check(broken);
    FAIL("expected NotFound");
  } catch (const kernel_error& e) {
    CHECK(e.code() == errc::not_found);
  }
}
