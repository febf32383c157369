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

#include "twincity/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace twincity {

namespace {

int64_t fdiv(int64_t a, int64_t b) {  // floor division, b > 0
  int64_t q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

}  // namespace

AffinePermutation AffinePermutation::identity(int n) {
  require(n >= 2, errc::parse_error, "rank must be at least 2");
  std::vector<int64_t> win(n);
  for (int i = 0; i < n; ++i) win[i] = i + 1;
  return AffinePermutation(n, std::move(win));
}

AffinePermutation AffinePermutation::simple(int n, int i) {
  require(0 <= i && i < n, errc::parse_error, "generator index out of range");
  return identity(n).times_simple(i);
}

AffinePermutation AffinePermutation::make(int n, const std::vector<int64_t>& win) {
  require(n >= 2, errc::parse_error, "rank must be at least 2");
  require(static_cast<int>(win.size()) == n, errc::parse_error,
          "window size does not match the rank");
  std::set<int64_t> residues;
  int64_t drift = 0;
  for (int i = 0; i < n; ++i) {
    int64_t r = win[i] - fdiv(win[i] - 1, n) * n;  // residue in 1..n
    residues.insert(r);
    drift += win[i] - (i + 1);
  }
  require(static_cast<int>(residues.size()) == n, errc::parse_error,
          "window entries collide modulo the rank");
  require(drift == 0, errc::parse_error, "window drift is nonzero");
  return AffinePermutation(n, win);
}

AffinePermutation AffinePermutation::finite_w0(int n) {
  require(n >= 2, errc::parse_error, "rank must be at least 2");
  std::vector<int64_t> win(n);
  for (int i = 0; i < n; ++i) win[i] = n - i;
  return AffinePermutation(n, std::move(win));
}

bool AffinePermutation::is_identity() const {
  for (int i = 0; i < n; ++i)
    if (window[i] != i + 1) return false;
  return true;
}

int64_t AffinePermutation::eval(int64_t i) const {
  int64_t q = fdiv(i - 1, n);
  int64_t r = i - q * n;  // in 1..n
  return window[r - 1] + q * n;
}

AffinePermutation AffinePermutation::multiply(const AffinePermutation& o) const {
  require(n == o.n, errc::internal_error, "rank mismatch in Weyl multiplication");
  std::vector<int64_t> win(n);
  for (int i = 0; i < n; ++i) win[i] = eval(o.window[i]);
  return AffinePermutation(n, std::move(win));
}

AffinePermutation AffinePermutation::inverse() const {
  std::vector<int64_t> win(n);
  for (int k = 1; k <= n; ++k) {
    int64_t v = window[k - 1];
    int64_t r = v - fdiv(v - 1, n) * n;  // residue of v in 1..n
    // w(k) = v, so w^{-1}(r) = k - (v - r); fill the window slot r.
    win[r - 1] = k - (v - r);
  }
  return AffinePermutation(n, std::move(win));
}

int64_t AffinePermutation::length() const {
  int64_t len = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int64_t t = fdiv(window[j] - window[i], n);
      len += t < 0 ? -t : t;
    }
  return len;
}

bool AffinePermutation::right_descent(int i) const {
  if (i >= 1) return window[i - 1] > window[i];
  return window[n - 1] - n > window[0];  // w(0) > w(1)
}

AffinePermutation AffinePermutation::times_simple(int i) const {
  require(0 <= i && i < n, errc::parse_error, "generator index out of range");
  std::vector<int64_t> win = window;
  if (i >= 1) {
    std::swap(win[i - 1], win[i]);
  } else {
    win[0] = window[n - 1] - n;  // w(0)
    win[n - 1] = window[0] + n;  // w(n+1)
  }
  return AffinePermutation(n, std::move(win));
}

AffinePermutation AffinePermutation::simple_times(int i) const {
  require(0 <= i && i < n, errc::parse_error, "generator index out of range");
  std::vector<int64_t> win = window;
  for (int j = 0; j < n; ++j) {
    int64_t v = win[j];
    int64_t r = v - fdiv(v - 1, n) * n;  // residue in 1..n
    if (i >= 1) {
      if (r == i) win[j] = v + 1;
      else if (r == i + 1) win[j] = v - 1;
    } else {
      if (r == 1) win[j] = v - 1;
      else if (r == n) win[j] = v + 1;
    }
  }
  return AffinePermutation(n, std::move(win));
}

std::vector<int> AffinePermutation::reduced_word() const {
  AffinePermutation w = *this;
  std::vector<int> letters;
  int64_t expect = length();
  while (!w.is_identity()) {
    int picked = -1;
    for (int i = 0; i < n; ++i)
      if (w.right_descent(i)) {
        picked = i;
        break;
      }
    require(picked >= 0, errc::internal_error, "non-identity element without descent");
    w = w.times_simple(picked);
    letters.push_back(picked);
  }
  std::reverse(letters.begin(), letters.end());
  require(static_cast<int64_t>(letters.size()) == expect, errc::internal_error,
          "reduced word length disagrees with the length function");
  return letters;
}

AffinePermutation AffinePermutation::from_word(int n, const std::vector<int>& word) {
  AffinePermutation w = identity(n);
  for (int letter : word) w = w.times_simple(letter);
  return w;
}

bool AffinePermutation::is_finite() const {
  for (int i = 0; i < n; ++i)
    if (window[i] < 1 || window[i] > n) return false;
  return true;
}

int AffinePermutation::sign() const {
  std::vector<int64_t> res(n);
  for (int i = 0; i < n; ++i) res[i] = window[i] - fdiv(window[i] - 1, n) * n;
  int inversions = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (res[i] > res[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::string AffinePermutation::str() const {
  std::string s = "[";
  for (int i = 0; i < n; ++i) {
    if (i) s += ", ";
    s += std::to_string(window[i]);
  }
  return s + "]";
}

std::vector<AffinePermutation> weyl_ball(int n, int bound) {
  std::set<std::vector<int64_t>> seen;
  std::vector<AffinePermutation> out;
  std::vector<AffinePermutation> frontier{AffinePermutation::identity(n)};
  seen.insert(frontier.front().window);
  out.push_back(frontier.front());
  for (int len = 1; len <= bound && !frontier.empty(); ++len) {
    std::vector<AffinePermutation> next;
    for (const auto& w : frontier)
      for (int i = 0; i < n; ++i) {
        if (w.right_descent(i)) continue;  // only walk upward in length
        AffinePermutation v = w.times_simple(i);
        if (seen.insert(v.window).second) next.push_back(v);
      }
    frontier = std::move(next);
    out.insert(out.end(), frontier.begin(), frontier.end());
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    auto la = a.length(), lb = b.length();
    if (la != lb) return la < lb;
    return a.window < b.window;
  });
  return out;
}

}  // namespace twincity
