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

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "twincity/errors.hpp"
#include "twincity/scalar.hpp"

namespace twincity {

/// Laurent polynomial sum c_e * t^e over an exact coefficient field K.
/// Invariant: the exponent->coefficient map stores no zero coefficients;
/// the empty map is the zero polynomial.
template <field_scalar K>
struct LaurentPoly {
  std::map<int, K> c;

  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(0, K::one()); }
  static LaurentPoly t() { return monomial(1, K::one()); }
  static LaurentPoly constant(const K& a) { return monomial(0, a); }
  static LaurentPoly monomial(int e, const K& a) {
    LaurentPoly p;
    if (!a.is_zero()) p.c.emplace(e, a);
    return p;
  }

  bool is_zero() const { return c.empty(); }

  /// Order of vanishing at t = 0 (minimal exponent).  Defined for nonzero.
  int v0() const {
    require(!is_zero(), errc::zero_input, "v0 of zero Laurent polynomial");
    return c.begin()->first;
  }
  /// Order of vanishing at t = infinity (negative of maximal exponent).
  int vinf() const {
    require(!is_zero(), errc::zero_input, "vinf of zero Laurent polynomial");
    return -c.rbegin()->first;
  }
  int max_exp() const { return c.rbegin()->first; }

  K coeff(int e) const {
    auto it = c.find(e);
    return it == c.end() ? K::zero() : it->second;
  }

  void set(int e, const K& a) {
    if (a.is_zero())
      c.erase(e);
    else
      c[e] = a;
  }
  void add_term(int e, const K& a) {
    auto it = c.find(e);
    if (it == c.end()) {
      if (!a.is_zero()) c.emplace(e, a);
    } else {
      it->second = it->second + a;
      if (it->second.is_zero()) c.erase(it);
    }
  }

  bool operator==(const LaurentPoly& o) const { return c == o.c; }

  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, a] : o.c) r.add_term(e, a);
    return r;
  }
  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, a] : c) r.c.emplace(e, -a);
    return r;
  }
  LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }
  LaurentPoly operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, a1] : c)
      for (const auto& [e2, a2] : o.c) r.add_term(e1 + e2, a1 * a2);
    return r;
  }
  LaurentPoly scaled(const K& a) const {
    LaurentPoly r;
    if (a.is_zero()) return r;
    for (const auto& [e, b] : c) r.c.emplace(e, a * b);
    return r;
  }
  /// Multiply by t^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, a] : c) r.c.emplace(e + k, a);
    return r;
  }
  /// Substitute t -> 1/t.
  LaurentPoly flipped() const {
    LaurentPoly r;
    for (const auto& [e, a] : c) r.c.emplace(-e, a);
    return r;
  }
  /// Keep only the terms of exponent <= bound.
  LaurentPoly truncated_above(int bound) const {
    LaurentPoly r;
    for (const auto& [e, a] : c)
      if (e <= bound) r.c.emplace(e, a);
    return r;
  }

  static K pow(const K& x, int e) {
    K r = K::one(), b = x;
    for (; e > 0; e >>= 1) {
      if (e & 1) r = r * b;
      b = b * b;
    }
    return r;
  }

  K eval(const K& x) const {
    K sum = K::zero();
    std::optional<K> xi;
    for (const auto& [e, a] : c) {
      if (e >= 0) {
        sum = sum + a * pow(x, e);
      } else {
        if (!xi) {
          require(!x.is_zero(), errc::zero_input, "evaluating t^(-k) at t = 0");
          xi = x.inverse();
        }
        sum = sum + a * pow(*xi, -e);
      }
    }
    return sum;
  }

  /// Exact division by the linear factor (t - root), root != 0.  The caller
  /// must know that `root` is a zero of this polynomial (checked).
  LaurentPoly divide_linear(const K& root) const {
    require(!is_zero(), errc::zero_input, "dividing zero by linear factor");
    // Shift to an honest polynomial, synthetic-divide, shift back.
    int low = v0();
    std::vector<K> a;  // coefficients of t^0 .. t^(deg)
    int deg = max_exp() - low;
    a.assign(deg + 1, K::zero());
    for (const auto& [e, v] : c) a[e - low] = v;
    std::vector<K> q(deg, K::zero());
    K carry = K::zero();
    for (int j = deg; j >= 1; --j) {
      carry = a[j] + carry * root;
      q[j - 1] = carry;
    }
    K rem = a[0] + carry * root;
    require(rem.is_zero(), errc::internal_error, "linear factor does not divide");
    LaurentPoly r;
    for (int j = 0; j < deg; ++j)
      if (!q[j].is_zero()) r.c.emplace(j + low, q[j]);
    return r;
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, a] : c) {
      if (!first) os << " + ";
      first = false;
      if (e == 0) {
        os << a.str();
      } else {
        os << a.str() << "*" << var;
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }
};

}  // namespace twincity
