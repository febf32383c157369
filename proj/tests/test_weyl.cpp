#include <doctest.h>

#include <cstdint>
#include <map>
#include <queue>
#include <vector>

#include "twincity/errors.hpp"
#include "twincity/weyl.hpp"

using namespace twincity;

namespace {

using Window = std::vector<std::int64_t>;

AffinePermutation P(int n, const Window& w) { return AffinePermutation::make(n, w); }

/// Independent length oracle: breadth-first search over the Cayley graph of
/// the simple generators, counting edge steps from the identity.
std::map<Window, int> bfs_lengths(int n, int radius) {
  std::map<Window, int> dist;
  std::queue<AffinePermutation> queue;
  dist[AffinePermutation::identity(n).window] = 0;
  queue.push(AffinePermutation::identity(n));
  while (!queue.empty()) {
    AffinePermutation w = queue.front();
    queue.pop();
    int d = dist.at(w.window);
    if (d == radius) continue;
    for (int s = 0; s < n; ++s) {
      AffinePermutation v = w.times_simple(s);
      if (dist.emplace(v.window, d + 1).second) queue.push(v);
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("window anchors for products and lengths") {
  CHECK(AffinePermutation::identity(2).window == Window{1, 2});
  CHECK(AffinePermutation::simple(2, 1).window == Window{2, 1});
  CHECK(AffinePermutation::simple(2, 0).window == Window{0, 3});

  // Left-to-right products of simple generators.
  AffinePermutation s0 = AffinePermutation::simple(2, 0);
  AffinePermutation s1 = AffinePermutation::simple(2, 1);
  CHECK(s0.multiply(s1).window == Window{3, 0});
  CHECK(s1.multiply(s0).window == Window{-1, 4});

  CHECK(P(2, {2, 1}).length() == 1);
  CHECK(P(2, {-1, 4}).length() == 2);
  CHECK(P(2, {3, 0}).length() == 2);
  CHECK(P(2, {4, -1}).length() == 3);
  CHECK(AffinePermutation::identity(3).length() == 0);
}

TEST_CASE("evaluation is shift-equivariant") {
  AffinePermutation w = P(2, {3, 0});
  CHECK(w.eval(1) == 3);
  CHECK(w.eval(2) == 0);
  CHECK(w.eval(3) == 5);
  CHECK(w.eval(0) == -2);
  AffinePermutation u = P(3, {2, 0, 4});
  for (int i = -3; i <= 3; ++i) CHECK(u.eval(i + 3) == u.eval(i) + 3);
}

TEST_CASE("length agrees with the Cayley-graph oracle") {
  for (auto [n, radius] : {std::pair{2, 6}, std::pair{3, 4}}) {
    std::map<Window, int> oracle = bfs_lengths(n, radius);
    for (const auto& [win, d] : oracle) {
      AffinePermutation w = P(n, win);
      CHECK(w.length() == d);
      CHECK(w.inverse().length() == d);
      CHECK(w.sign() == (d % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("reduced words multiply back and start with a descent") {
  for (int n : {2, 3}) {
    for (const AffinePermutation& w : weyl_ball(n, 4)) {
      std::vector<int> word = w.reduced_word();
      CHECK(static_cast<int>(word.size()) == w.length());
      CHECK(AffinePermutation::from_word(n, word) == w);
      if (!word.empty()) CHECK(w.left_descent(word[0]));
      AffinePermutation acc = AffinePermutation::identity(n);
      for (int s : word) acc = acc.times_simple(s);
      CHECK(acc == w);
    }
  }
  CHECK(P(2, {3, 0}).reduced_word() == std::vector<int>{0, 1});
}

TEST_CASE("group laws and descent moves") {
  for (int n : {2, 3}) {
    for (const AffinePermutation& w : weyl_ball(n, 3)) {
      CHECK(w.multiply(w.inverse()).is_identity());
      CHECK(w.inverse().inverse() == w);
      for (int s = 0; s < n; ++s) {
        AffinePermutation ws = w.times_simple(s);
        CHECK(ws == w.multiply(AffinePermutation::simple(n, s)));
        CHECK(w.simple_times(s) == AffinePermutation::simple(n, s).multiply(w));
        int diff = ws.length() - w.length();
        CHECK((diff == 1 || diff == -1));
        CHECK(w.right_descent(s) == (diff == -1));
      }
    }
  }
}

TEST_CASE("finite part and longest finite element") {
  CHECK(AffinePermutation::finite_w0(2).window == Window{2, 1});
  CHECK(AffinePermutation::finite_w0(3).window == Window{3, 2, 1});
  CHECK(AffinePermutation::finite_w0(3).length() == 3);
  CHECK(P(2, {2, 1}).is_finite());
  CHECK(!P(2, {3, 0}).is_finite());
  CHECK(!P(2, {-1, 4}).is_finite());
  CHECK(AffinePermutation::identity(4).is_finite());
}

TEST_CASE("ball enumeration is sorted and complete") {
  std::vector<AffinePermutation> ball = weyl_ball(2, 3);
  CHECK(ball.size() == 7);  // 1 + 2 + 2 + 2 elements of length 0..3
  for (size_t k = 0; k + 1 < ball.size(); ++k) {
    const AffinePermutation &a = ball[k], &b = ball[k + 1];
    bool ordered = a.length() < b.length() ||
                   (a.length() == b.length() && a.window < b.window);
    CHECK(ordered);
  }
  std::map<Window, int> oracle = bfs_lengths(3, 3);
  std::size_t within = 0;
  for (const auto& [win, d] : oracle)
    if (d <= 3) ++within;
  CHECK(weyl_ball(3, 3).size() == within);
}

TEST_CASE("window validation") {
  CHECK_THROWS_AS(P(1, {1}), kernel_error);
  CHECK_THROWS_AS(P(2, {1, 3}), kernel_error);   // residues collide mod 2
  CHECK_THROWS_AS(P(2, {2, 3}), kernel_error);   // drift is nonzero
  CHECK_THROWS_AS(AffinePermutation::simple(2, 2), kernel_error);
}
