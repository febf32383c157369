#include <doctest.h>

#include <cstdlib>

#include "twincity/bruhat.hpp"
#include "twincity/building.hpp"
#include "twincity/errors.hpp"

#include "test_util.hpp"

using namespace twincity;
using testutil::gq;
using testutil::mat;
using testutil::perm;
using testutil::pole;

using RF = RationalFunction;
using LP = LaurentPoly<GaussQ>;

namespace {

Mat<Series<GaussQ>> series_of(const LoopMatrix& m, Place p, int hi) {
  return expand_matrix(m, p, hi);
}

bool matrices_agree(const Mat<Series<GaussQ>>& a, const Mat<Series<GaussQ>>& b) {
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      if (!a.at(i, j).agrees(b.at(i, j))) return false;
  return true;
}

}  // namespace

TEST_CASE("monomial matrices encode affine permutations") {
  CHECK(monomial_to_weyl(LoopMatrix::identity(2)) == perm(2, {1, 2}));
  CHECK(monomial_to_weyl(mat(R"([[[[1,1]],0],[0,[[-1,1]]]])")) == perm(2, {-1, 4}));
  CHECK(monomial_to_weyl(mat(R"([[[[-1,1]],0],[0,[[1,1]]]])")) == perm(2, {3, 0}));
  CHECK(monomial_to_weyl(mat(R"([[0,1],[-1,0]])")) == perm(2, {2, 1}));

  CHECK(weyl_to_monomial(perm(2, {1, 2})) == LoopMatrix::identity(2));
  CHECK(weyl_to_monomial(perm(2, {2, 1})) == mat(R"([[0,-1],[1,0]])"));

  for (int n : {2, 3})
    for (const AffinePermutation& w : weyl_ball(n, 5)) {
      LoopMatrix m = weyl_to_monomial(w);
      CHECK(m.det() == RF::one());
      CHECK(monomial_to_weyl(m) == w);
    }

  LoopMatrix bad = LoopMatrix::identity(2);
  bad.at(0, 1) = RF::one();
  CHECK_THROWS_AS(monomial_to_weyl(bad), kernel_error);
}

TEST_CASE("matrix expansion windows") {
  Mat<Series<GaussQ>> a = series_of(LoopMatrix::identity(2), Place::at_zero, 4);
  CHECK(a.at(0, 0).coeff(0) == GaussQ::one());
  CHECK(a.at(0, 1).known_zero());
  CHECK(!a.at(0, 0).coeff(4).has_value());
}

TEST_CASE("Iwahori labels of unipotent anchors") {
  CHECK(rational_bruhat(mat(R"([[1,[[-1,1]]],[0,1]])"), true).label() == perm(2, {0, 3}));
  CHECK(rational_bruhat(mat(R"([[1,[[1,1]]],[0,1]])"), true).label().is_identity());
  CHECK(rational_bruhat(mat(R"([[1,0],[[[1,1]],1]])"), true).label().is_identity());
  CHECK(rational_bruhat(mat(R"([[0,1],[-1,0]])"), true).label() == perm(2, {2, 1}));

  // An element of the opposite Iwahori is trivial on the minus side only.
  LoopMatrix h = LoopMatrix::identity(2);
  h.at(0, 1) = pole(gq(1, 3));
  CHECK(rational_bruhat(h, false).label().is_identity());
  try {
    rational_bruhat(h, true);
    FAIL("expected WrongRegularity");
  } catch (const kernel_error& e) {
    CHECK(e.code() == errc::wrong_regularity);
  }
}

TEST_CASE("Iwahori witnesses reproduce the monomial form") {
  for (const char* text : {R"([[1,[[-1,1]]],[0,1]])", R"([[0,1],[-1,0]])",
                           R"([[[[ -1,1]],0],[0,[[1,1]]]])"}) {
    LoopMatrix g = mat(text);
    BruhatDecomposition d = rational_bruhat(g, true);
    Mat<Series<GaussQ>> a = series_of(g, Place::at_zero, d.precision);
    Mat<Series<GaussQ>> prod = d.elim.left * a * d.elim.right;
    Mat<Series<GaussQ>> want =
        series_of(weyl_to_monomial(d.label()), Place::at_zero, d.precision);
    CHECK(matrices_agree(prod, want));
    Mat<Series<GaussQ>> li = d.elim.left * d.elim.left_inv;
    CHECK(matrices_agree(li, series_of(LoopMatrix::identity(g.n), Place::at_zero, 4)));
  }
}

TEST_CASE("Birkhoff labels of rational anchors") {
  CHECK(birkhoff(LoopMatrix::identity(2)).label().is_identity());
  CHECK(birkhoff(mat(R"([[0,1],[-1,0]])")).label() == perm(2, {2, 1}));
  CHECK(birkhoff(mat(R"([[[[-1,1]],0],[0,[[1,1]]]])")).label() == perm(2, {3, 0}));
  CHECK(birkhoff(mat(R"([[[[1,1]],0],[0,[[-1,1]]]])")).label() == perm(2, {-1, 4}));

  LoopMatrix u = LoopMatrix::identity(2);
  u.at(0, 1) = pole(gq(2));
  CHECK(birkhoff(u).label().is_identity());
}

TEST_CASE("exact Birkhoff witnesses are exact and Iwahori") {
  LoopMatrix g = mat(R"([[[[-1,1]],0],[[[0,1]],[[1,1]]]])");  // rows (1/t, 0), (1, t)
  ExactBirkhoffDecomposition d = exact_birkhoff(g);
  CHECK(d.label == perm(2, {2, 1}));
  CHECK(d.left == mat(R"([[1,[[-1,-1]]],[0,1]])"));
  CHECK(d.right == mat(R"([[1,[[1,-1]]],[0,1]])"));
  CHECK(d.left * g * d.right == weyl_to_monomial(d.label));

  LoopMatrix inner = LoopMatrix::identity(2);
  inner.at(1, 0) = pole(gq(1, 3));
  std::vector<LoopMatrix> inputs = {
      mat(R"([[1,{"num":[[0,1]],"den":[[2,1]]}],[0,1]])"),
      mat(R"([[[[1,1]],0],[0,[[-1,1]]]])"),
      inner * mat(R"([[[[-1,1]],0],[0,[[1,1]]]])") * mat(R"([[1,[[1,1]]],[0,1]])")};
  for (const LoopMatrix& h : inputs) {
    ExactBirkhoffDecomposition e = exact_birkhoff(h);
    CHECK(e.left * h * e.right == weyl_to_monomial(e.label));
    CHECK(in_iwahori(e.left, false));
    CHECK(in_iwahori(e.right, true));
    CHECK(e.left.det() == RF::one());
    CHECK(e.right.det() == RF::one());
  }
}

TEST_CASE("inside poles are cleared by a negative Iwahori corrector") {
  LoopMatrix g = LoopMatrix::identity(2);
  g.at(0, 1) = pole(gq(1, 3));
  InsidePoleClearing cl = clear_inside_poles(g);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (const auto& [root, order] : cl.cleared.at(i, j).den)
        CHECK(root.norm2() >= 1);
  CHECK(cl.aligner * g == cl.cleared);
  CHECK(cl.aligner.det() == RF::one());
  CHECK(in_iwahori(cl.aligner, false));

  // Elements of the negative Iwahori carry the trivial Birkhoff label.
  CHECK(birkhoff(g).label().is_identity());

  // Already-aligned input needs no corrector.
  InsidePoleClearing again = clear_inside_poles(cl.cleared);
  CHECK(again.aligner == LoopMatrix::identity(2));
}

TEST_CASE("Birkhoff labels are invariant under Iwahori translation") {
  LoopMatrix g0 = mat(R"([[[[-1,1]],0],[0,[[1,1]]]])");  // label (3, 0)
  LoopMatrix p = LoopMatrix::identity(2);
  p.at(1, 0) = pole(gq(1, 3));  // negative-Iwahori element with an inside pole
  LoopMatrix u = mat(R"([[1,[[1,1]]],[0,1]])");  // positive-Iwahori element
  CHECK(in_iwahori(p, false));
  CHECK(in_iwahori(u, true));
  CHECK(birkhoff(p * g0).label() == perm(2, {3, 0}));
  CHECK(birkhoff(p * g0 * u).label() == perm(2, {3, 0}));
  CHECK(exact_birkhoff(p * g0 * u).label == perm(2, {3, 0}));
}

TEST_CASE("precision cap default") {
  // The cap is read once per process; the suite runs with the variable unset.
  CHECK(precision_cap() >= 8);
  if (!std::getenv("TWINCITY_PRECISION_CAP")) CHECK(precision_cap() == 512);
}

TEST_CASE("finite-field eliminations match the rational anchors") {
  using K = Fp<2>;
  LaurentMat<K> id = LaurentMat<K>::identity(2);
  CHECK(bruhat_laurent(id, true).elim.label.is_identity());

  LaurentMat<K> u = LaurentMat<K>::identity(2);
  u.at(0, 1) = LaurentPoly<K>::monomial(-1, K::one());
  CHECK(bruhat_laurent(u, true).elim.label == perm(2, {0, 3}));

  LaurentMat<K> d = LaurentMat<K>(2);
  d.at(0, 0) = LaurentPoly<K>::monomial(-1, K::one());
  d.at(1, 1) = LaurentPoly<K>::monomial(1, K::one());
  CHECK(birkhoff_laurent(d).elim.label == perm(2, {3, 0}));
  CHECK(bruhat_laurent(d, true).elim.label == perm(2, {3, 0}));
}
