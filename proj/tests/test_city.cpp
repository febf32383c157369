#include <doctest.h>

#include <cmath>
#include <vector>

#include "twincity/city.hpp"
#include "twincity/errors.hpp"

#include "test_util.hpp"

using namespace twincity;
using testutil::gq;
using testutil::mat;
using testutil::perm;
using testutil::pole;

namespace {

LoopMatrix twist(const GaussQ& root) {
  LoopMatrix m = LoopMatrix::identity(2);
  m.at(0, 1) = pole(root);
  return m;
}

}  // namespace

TEST_CASE("components split along global decomposability") {
  Chamber x = base_chamber(2, true);
  CHECK(same_component(x, x));
  CHECK(same_component(x, make_chamber(true, mat(R"([[1,[[1,1]]],[0,1]])"))));
  CHECK(same_component(x, make_chamber(true, weyl_to_monomial(perm(2, {3, 0})))));
  CHECK(same_component(x, make_chamber(true, twist(gq(2)))));

  Chamber y = make_chamber(true, twist(gq(1, 3)));
  CHECK(!same_component(x, y));
  CHECK(delta(x, y) == DistanceValue::infinite());
  CHECK(same_component(y, make_chamber(true, twist(gq(1, 3)) * twist(gq(2)))));

  CHECK_THROWS_AS(same_component(x, base_chamber(2, false)), kernel_error);
}

TEST_CASE("component registry lookup") {
  std::vector<Chamber> registry = {base_chamber(2, true),
                                   make_chamber(true, twist(gq(1, 3)))};
  CHECK(component_of(base_chamber(2, true), registry) == 0);
  CHECK(component_of(make_chamber(true, twist(gq(2))), registry) == 0);
  CHECK(component_of(make_chamber(true, twist(gq(1, 3))), registry) == 1);

  Chamber other = make_chamber(true, twist(gq(1, 20)));
  try {
    component_of(other, registry);
    FAIL("expected NotFound");
  } catch (const kernel_error& e) {
    CHECK(e.code() == errc::not_found);
  }
}

TEST_CASE("pseudo-distance grades from the pole pool") {
  LoopMatrix id = LoopMatrix::identity(2);
  CHECK(pseudo_distance(id, id).is_zero());
  CHECK(pseudo_distance(id, id).d_str() == "0");

  CHECK(pseudo_distance(twist(gq(2)), id).nu == 0U);
  CHECK(pseudo_distance(twist(gq(2)), id).d_str() == "1");
  CHECK(pseudo_distance(twist(gq(25)), id).nu == 3U);
  CHECK(pseudo_distance(twist(gq(25)), id).d_str() == "e^-3");
  CHECK(pseudo_distance(twist(gq(1, 20)), id).nu == 2U);
  CHECK(pseudo_distance(twist(gq(1, 3)), id).nu == 1U);

  double approx = pseudo_distance(twist(gq(25)), id).d_approx();
  CHECK(approx == doctest::Approx(std::exp(-3.0)));
  CHECK(pseudo_distance(id, id).d_approx() == 0.0);
}

TEST_CASE("pseudo-distance is symmetric and chamber-level constant") {
  LoopMatrix a = twist(gq(1, 20));
  LoopMatrix b = twist(gq(2));
  CHECK(pseudo_distance(a, b) == pseudo_distance(b, a));

  Chamber x = make_chamber(true, a);
  Chamber y = make_chamber(true, b);
  CHECK(pseudo_distance(x, y) == pseudo_distance(a, b));
  // Moving inside a component does not change the value.
  Chamber x2 = make_chamber(true, a * weyl_to_monomial(perm(2, {3, 0})));
  CHECK(pseudo_distance(x2, y) == pseudo_distance(x, y));
}

TEST_CASE("strong triangle inequality on a fixed triple") {
  LoopMatrix id = LoopMatrix::identity(2);
  LoopMatrix a = twist(gq(25));
  LoopMatrix b = twist(gq(2));
  auto nu_of = [](const CityMetricValue& v) { return v.nu.value_or(1000U); };
  unsigned xz = nu_of(pseudo_distance(a, b));
  unsigned xy = nu_of(pseudo_distance(a, id));
  unsigned yz = nu_of(pseudo_distance(id, b));
  // d(x,z) <= max(d(x,y), d(y,z)) reads nu(x,z) >= min(nu(x,y), nu(y,z)).
  CHECK(xz >= std::min(xy, yz));
  // The two right-hand values differ, so equality must hold.
  REQUIRE(xy != yz);
  CHECK(xz == std::min(xy, yz));
}

TEST_CASE("codistance stays finite across components") {
  Chamber x = make_chamber(true, twist(gq(1, 3)));
  Chamber y = base_chamber(2, false);
  CHECK(!same_component(x, bn_flip(y)));
  AffinePermutation w = cross_codistance(x, y);
  CHECK(w == codelta(x, y));

  // Positive chamber in a non-standard component against several negatives.
  for (const AffinePermutation& v : weyl_ball(2, 2)) {
    Chamber z = make_chamber(false, weyl_to_monomial(v));
    AffinePermutation c = cross_codistance(x, z);
    CHECK(c == codelta(x, z));
  }
}
