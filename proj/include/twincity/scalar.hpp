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

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>

#include "twincity/errors.hpp"

namespace twincity {

/// Exact scalar concept: the coefficient fields used throughout the kernel.
/// All arithmetic is exact; no rounding ever happens.
template <class K>
concept field_scalar = requires(K a, K b) {
  { K::zero() } -> std::convertible_to<K>;
  { K::one() } -> std::convertible_to<K>;
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a.inverse() } -> std::convertible_to<K>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
};

namespace detail {
constexpr bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
}  // namespace detail

/// Prime field F_p, p a compile-time prime <= 2^16.  Used by the
/// finite-field tier: brute-force oracles and counting tests.
template <std::uint32_t P>
struct Fp {
  static_assert(P >= 2 && P <= 65536, "prime must be <= 2^16");
  static_assert(detail::is_prime_u32(P), "modulus must be prime");

  std::uint32_t v = 0;  // always reduced into [0, P)

  constexpr Fp() = default;
  constexpr explicit Fp(long long x) {
    long long r = x % static_cast<long long>(P);
    if (r < 0) r += P;
    v = static_cast<std::uint32_t>(r);
  }

  static constexpr Fp zero() { return Fp(); }
  static constexpr Fp one() { return Fp(1); }

  constexpr bool is_zero() const { return v == 0; }
  constexpr bool operator==(const Fp& o) const = default;

  constexpr Fp operator+(const Fp& o) const { return from_raw((v + o.v) % P); }
  constexpr Fp operator-(const Fp& o) const { return from_raw((v + P - o.v) % P); }
  constexpr Fp operator-() const { return from_raw(v == 0 ? 0 : P - v); }
  constexpr Fp operator*(const Fp& o) const {
    return from_raw(static_cast<std::uint64_t>(v) * o.v % P);
  }

  Fp inverse() const {
    require(v != 0, errc::zero_input, "inverse of zero in F_p");
    // Fermat: v^(P-2).
    std::uint64_t base = v, acc = 1, e = P - 2;
    while (e) {
      if (e & 1) acc = acc * base % P;
      base = base * base % P;
      e >>= 1;
    }
    return from_raw(static_cast<std::uint32_t>(acc));
  }
  Fp operator/(const Fp& o) const { return *this * o.inverse(); }

  std::string str() const { return std::to_string(v); }

 private:
  static constexpr Fp from_raw(std::uint64_t r) {
    Fp x;
    x.v = static_cast<std::uint32_t>(r);
    return x;
  }
};

/// Exact rational scalar: thin wrapper around GMP's mpq_class giving it the
/// field_scalar interface (canonical/reduced form is maintained by GMP).
struct Rational {
  mpq_class v;

  Rational() : v(0) {}
  explicit Rational(long long x) : v(static_cast<long>(x)) {}
  explicit Rational(const mpq_class& q) : v(q) { v.canonicalize(); }

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }

  bool is_zero() const { return sgn(v) == 0; }
  bool operator==(const Rational& o) const { return v == o.v; }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(v + o.v)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v - o.v)); }
  Rational operator-() const { return Rational(mpq_class(-v)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v * o.v)); }
  Rational inverse() const {
    require(!is_zero(), errc::zero_input, "inverse of zero rational");
    return Rational(mpq_class(1 / v));
  }
  Rational operator/(const Rational& o) const { return *this * o.inverse(); }

  std::string str() const { return v.get_str(); }
};

/// Gaussian rational a + b*i with exact mpq components.  This is the
/// splitting field required of denominator roots: pole locations live here
/// and their moduli squared (norm) are exact rationals.
struct GaussQ {
  mpq_class re, im;

  GaussQ() : re(0), im(0) {}
  explicit GaussQ(long long r) : re(static_cast<long>(r)), im(0) {}
  GaussQ(const mpq_class& r, const mpq_class& i) : re(r), im(i) {
    re.canonicalize();
    im.canonicalize();
  }

  static GaussQ zero() { return GaussQ(); }
  static GaussQ one() { return GaussQ(1); }
  static GaussQ i() { return GaussQ(mpq_class(0), mpq_class(1)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  bool operator==(const GaussQ& o) const { return re == o.re && im == o.im; }

  GaussQ operator+(const GaussQ& o) const { return GaussQ(re + o.re, im + o.im); }
  GaussQ operator-(const GaussQ& o) const { return GaussQ(re - o.re, im - o.im); }
  GaussQ operator-() const { return GaussQ(-re, -im); }
  GaussQ operator*(const GaussQ& o) const {
    return GaussQ(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  GaussQ conj() const { return GaussQ(re, -im); }

  /// |z|^2 = re^2 + im^2, exact.  Pole-modulus comparisons reduce to
  /// comparing this rational against rational bounds for powers of e.
  mpq_class norm2() const { return re * re + im * im; }

  GaussQ inverse() const {
    require(!is_zero(), errc::zero_input, "inverse of zero Gaussian rational");
    mpq_class n = norm2();
    return GaussQ(re / n, -im / n);
  }
  GaussQ operator/(const GaussQ& o) const { return *this * o.inverse(); }

  /// Total order (lexicographic on (re, im)); used only as a container key.
  bool operator<(const GaussQ& o) const {
    int c = cmp(re, o.re);
    if (c != 0) return c < 0;
    return cmp(im, o.im) < 0;
  }

  std::string str() const {
    if (sgn(im) == 0) return re.get_str();
    std::string s = "(" + re.get_str();
    s += sgn(im) < 0 ? "-" : "+";
    mpq_class a = abs(im);
    s += a.get_str() + "i)";
    return s;
  }
};

static_assert(field_scalar<Fp<2>>);
static_assert(field_scalar<Fp<3>>);
static_assert(field_scalar<Rational>);
static_assert(field_scalar<GaussQ>);

}  // namespace twincity
