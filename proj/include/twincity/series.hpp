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

#pragma once

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "twincity/errors.hpp"
#include "twincity/laurent.hpp"
#include "twincity/scalar.hpp"

namespace twincity {

/// Truncated power series in one uniformizer s over an exact field K.
///
/// Knowledge model: every coefficient of s^e with e < hi is known exactly
/// (coefficients below `lo` are zero, those in [lo, hi) are stored); nothing
/// is asserted about exponents >= hi.  `hi == kExact` (INT_MAX) means the
/// value is an exact Laurent polynomial: all unstored coefficients are zero.
///
/// This single invariant is what lets elimination runs certify their output:
/// a claim "valuation >= v" is provable iff all known coefficients below v
/// vanish AND v <= hi.
template <field_scalar K>
struct Series {
  static constexpr int kExact = INT_MAX;

  int lo = 0;          // exponent of c[0]
  int hi = kExact;     // exponents < hi are known
  std::vector<K> c;    // coefficients for lo, lo+1, ...

  Series() = default;  // exact zero

  static Series exact_zero() { return Series(); }
  /// Generic-entry aliases used by Mat<T>: `zero` is the exact zero and
  /// `is_zero` means provably zero (a merely invisible value is not zero,
  /// so it cannot be skipped in products).
  static Series zero() { return Series(); }
  bool is_zero() const { return known_zero(); }

  static Series from_laurent(const LaurentPoly<K>& p, int hi = kExact) {
    Series s;
    s.hi = hi;
    if (p.is_zero()) return s;
    s.lo = p.v0();
    int top = p.max_exp();
    if (hi != kExact && top >= hi) top = hi - 1;
    if (top < s.lo) {
      s.lo = 0;
      s.c.clear();
      return s;
    }
    s.c.assign(top - s.lo + 1, K::zero());
    for (const auto& [e, a] : p.c)
      if (e <= top) s.c[e - s.lo] = a;
    s.normalize();
    return s;
  }

  static Series monomial(int e, const K& a, int hi = kExact) {
    return from_laurent(LaurentPoly<K>::monomial(e, a), hi);
  }
  static Series one(int hi = kExact) { return monomial(0, K::one(), hi); }

  bool exact() const { return hi == kExact; }

  /// Strip leading/trailing stored zeros (pure normalization).
  void normalize() {
    std::size_t b = 0;
    while (b < c.size() && c[b].is_zero()) ++b;
    std::size_t e = c.size();
    while (e > b && c[e - 1].is_zero()) --e;
    if (b > 0 || e < c.size()) {
      std::vector<K> fresh(c.begin() + b, c.begin() + e);
      lo += static_cast<int>(b);
      c = std::move(fresh);
    }
    if (c.empty()) lo = 0;
  }

  /// Exact valuation if a nonzero coefficient is visible; nullopt otherwise
  /// (the value is then either an exact zero or hidden below precision).
  std::optional<int> val() const {
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) return lo + static_cast<int>(i);
    return std::nullopt;
  }

  /// True when "valuation >= v" is a theorem given current knowledge.
  bool val_at_least(int v) const {
    if (val()) return *val() >= v;
    return exact() || hi >= v;  // zero so far; tail starts at hi
  }
  bool known_zero() const { return exact() && !val().has_value(); }

  /// Coefficient of s^e, if known.
  std::optional<K> coeff(int e) const {
    if (e >= hi) return std::nullopt;
    if (e < lo || e >= lo + static_cast<int>(c.size())) return K::zero();
    return c[e - lo];
  }
  K coeff_or_throw(int e, const char* what) const {
    auto a = coeff(e);
    if (!a) fail(errc::insufficient_precision, what);
    return *a;
  }

  Series truncated(int new_hi) const {
    if (new_hi >= hi) return *this;
    Series s;
    s.hi = new_hi;
    s.lo = lo;
    int len = new_hi - lo;
    if (len <= 0) {
      s.lo = 0;
      return s;
    }
    s.c.assign(c.begin(), c.begin() + std::min<std::size_t>(c.size(), len));
    s.normalize();
    return s;
  }

  Series shifted(int k) const {
    Series s = *this;
    if (!s.c.empty()) s.lo += k;
    if (s.hi != kExact) s.hi += k;
    if (s.c.empty() && s.hi == kExact) s.lo = 0;
    return s;
  }

  Series scaled(const K& a) const {
    Series s;
    s.hi = hi;
    if (a.is_zero()) {
      // Known coefficients all become zero; the unknown tail stays unknown
      // in general, but scaling by an exact zero kills it too.
      s.hi = kExact;
      return s;
    }
    s.lo = lo;
    s.c.reserve(c.size());
    for (const auto& b : c) s.c.push_back(a * b);
    s.normalize();
    return s;
  }

  Series operator-() const { return scaled(-K::one()); }

  Series operator+(const Series& o) const {
    Series s;
    s.hi = std::min(hi, o.hi);
    if (c.empty() && o.c.empty()) {
      s.lo = 0;
      return s;
    }
    int base = c.empty() ? o.lo : (o.c.empty() ? lo : std::min(lo, o.lo));
    int top_mine = lo + static_cast<int>(c.size());
    int top_theirs = o.lo + static_cast<int>(o.c.size());
    int top = std::max(c.empty() ? base : top_mine, o.c.empty() ? base : top_theirs);
    if (s.hi != kExact) top = std::min(top, s.hi);
    if (top <= base) {
      s.lo = 0;
      return s;
    }
    s.lo = base;
    s.c.assign(top - base, K::zero());
    auto acc = [&](const Series& f) {
      for (std::size_t i = 0; i < f.c.size(); ++i) {
        int e = f.lo + static_cast<int>(i);
        if (e >= base && e < top) s.c[e - base] = s.c[e - base] + f.c[i];
      }
    };
    acc(*this);
    acc(o);
    s.normalize();
    return s;
  }
  Series operator-(const Series& o) const { return *this + (-o); }

  /// Lower bound for the valuation usable in knowledge bookkeeping: the
  /// known valuation, else the start of the unknown tail (infinite for an
  /// exact zero).
  long long val_lower_bound() const {
    auto v = val();
    if (v) return *v;
    return exact() ? static_cast<long long>(kExact) : hi;
  }

  static int clamp_hi(long long h) {
    return h >= kExact ? kExact : static_cast<int>(h);
  }

  Series operator*(const Series& o) const {
    if (known_zero() || o.known_zero()) return exact_zero();
    Series s;
    long long h = std::min(
        hi == kExact ? static_cast<long long>(kExact) : hi + o.val_lower_bound(),
        o.hi == kExact ? static_cast<long long>(kExact) : o.hi + val_lower_bound());
    s.hi = clamp_hi(h);
    if (c.empty() || o.c.empty()) {
      s.lo = 0;
      return s;
    }
    int base = lo + o.lo;
    long long topll = static_cast<long long>(lo) + c.size() + o.lo + o.c.size() - 1;
    int top = s.hi == kExact ? static_cast<int>(topll) : std::min<long long>(topll, s.hi);
    if (top <= base) {
      s.lo = 0;
      return s;
    }
    s.lo = base;
    s.c.assign(top - base, K::zero());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.c.size(); ++j) {
        int e = lo + static_cast<int>(i) + o.lo + static_cast<int>(j);
        if (e >= top) break;
        s.c[e - base] = s.c[e - base] + c[i] * o.c[j];
      }
    }
    s.normalize();
    return s;
  }

  /// Quotient *this / g, with result knowledge window bounded by `cap`
  /// (callers pass their working precision).  Requires the valuation of g
  /// to be visible; otherwise precision is insufficient by definition.
  Series div(const Series& g, int cap) const {
    require(cap < kExact, errc::internal_error, "series division needs a finite window");
    auto vg = g.val();
    if (!vg) fail(errc::insufficient_precision, "divisor valuation hidden");
    if (known_zero()) return exact_zero();
    long long vlb = val_lower_bound();
    long long h = std::min<long long>(
        hi == kExact ? kExact : static_cast<long long>(hi) - *vg,
        g.hi == kExact ? kExact : vlb - *vg + (g.hi - *vg));
    h = std::min<long long>(h, cap);
    int qhi = clamp_hi(h);
    Series q;
    q.hi = qhi;
    if (!val()) return q;  // hidden-zero numerator -> hidden-zero quotient
    int qlo = *val() - *vg;
    if (qlo >= qhi) {
      q.lo = 0;
      return q;
    }
    K lead_inv = g.coeff(*vg)->inverse();
    Series rem = *this;
    std::vector<K> qc;
    int e = qlo;
    for (; e < qhi; ++e) {
      auto re = rem.coeff(e + *vg);
      if (!re) break;  // defensive: shrink the promised window
      K qe = *re * lead_inv;
      qc.push_back(qe);
      if (!qe.is_zero()) rem = rem - g.shifted(e).scaled(qe);
    }
    q.hi = e;
    q.lo = qlo;
    q.c = std::move(qc);
    q.normalize();
    return q;
  }

  /// Do the two series agree everywhere both are known?
  bool agrees(const Series& o) const {
    long long bound = std::min(hi, o.hi);
    long long from = std::min(c.empty() ? bound : lo, o.c.empty() ? bound : o.lo);
    long long to = std::max(c.empty() ? from : lo + static_cast<long long>(c.size()),
                            o.c.empty() ? from : o.lo + static_cast<long long>(o.c.size()));
    to = std::min(to, bound);
    for (long long e = from; e < to; ++e) {
      auto a = coeff(static_cast<int>(e)), b = o.coeff(static_cast<int>(e));
      if (!a || !b) return true;
      if (!(*a == *b)) return false;
    }
    return true;
  }

  LaurentPoly<K> known_part() const {
    LaurentPoly<K> p;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) p.c.emplace(lo + static_cast<int>(i), c[i]);
    return p;
  }

  std::string str(const std::string& var = "s") const {
    std::string s = known_part().str(var);
    if (!exact()) s += " + O(" + var + "^" + std::to_string(hi) + ")";
    return s;
  }
};

}  // namespace twincity
