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
//
// Randomized property testing of the building, twinning, city, boundary
// and flip structure, against independent brute-force oracles where one
// exists.  Every sample derives its own reproduction seed from the
// configured master seed, so reports are deterministic and every recorded
// violation can be replayed in isolation.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "twincity/building.hpp"
#include "twincity/matrix.hpp"

namespace twincity {

/// Deterministic generator: a fixed-algorithm 64-bit engine plus bias-free
/// enough modular draws (all consumers are property tests).
struct Rng {
  std::mt19937_64 g;

  explicit Rng(std::uint64_t seed) : g(seed) {}
  std::uint64_t u64() { return g(); }
  int below(int n) { return static_cast<int>(u64() % static_cast<std::uint64_t>(n)); }
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (u64() & 1) != 0; }
};

/// Stable per-sample seed derivation (splitmix64 of master seed + index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// The stock pole pool {2, 25, 1/20, 1/3}: two points outside and two inside
/// the unit circle, so every regularity class is reachable.
std::vector<GaussQ> default_pole_pool();

struct GeneratorConfig {
  std::uint64_t seed = 20260814;
  std::string field = "Q";  // "Q", "F2" or "F3"
  int samples = 100;
  int exp_lo = -2, exp_hi = 2;  // exponent window for random matrix entries
  std::vector<GaussQ> pole_pool = default_pole_pool();
};

/// Random scalars / entries used by the generators.
GaussQ random_gauss(Rng& rng);
GaussQ random_gauss_nonzero(Rng& rng);

/// Determinant-one random loop matrix of the requested regularity class,
/// built from elementary transvections; poles are drawn from the pool.
/// EmptyPool when the class needs poles the pool does not offer.
LoopMatrix random_loop_matrix(Rng& rng, int n, Regularity target, const GeneratorConfig& cfg);

/// Random element of the positive or negative Iwahori subgroup (products
/// of patterned transvections and constant diagonal units).
LoopMatrix random_iwahori(Rng& rng, int n, bool plus, const GeneratorConfig& cfg);

/// Determinant-one random Laurent matrix over F_p.
template <std::uint32_t P>
Mat<LaurentPoly<Fp<P>>> random_laurent_matrix(Rng& rng, int n, const GeneratorConfig& cfg) {
  using Poly = LaurentPoly<Fp<P>>;
  Mat<Poly> m = Mat<Poly>::identity(n);
  const int factors = rng.range(2, 6);
  for (int f = 0; f < factors; ++f) {
    int i = rng.below(n);
    int j = rng.below(n - 1);
    if (j >= i) ++j;
    Mat<Poly> e = Mat<Poly>::identity(n);
    Poly entry = Poly::zero();
    const int terms = rng.range(1, 2);
    for (int t = 0; t < terms; ++t)
      entry.add_term(rng.range(cfg.exp_lo, cfg.exp_hi), Fp<P>(rng.range(1, static_cast<int>(P) - 1)));
    if (entry.is_zero()) entry = Poly::one();
    e.at(i, j) = entry;
    m = m * e;
  }
  return m;
}

/// Independent brute-force label oracle over F_2, n = 2.  The Iwahori
/// modes enumerate the full chamber ball through panel moves and decide
/// coset equality by the exact membership test; the Birkhoff mode uses a
/// window-bounded saturation table seeded at the monomial representatives.
/// NotFound when the input exceeds the stated bounds.
enum class OracleMode { plus, minus, birkhoff };
AffinePermutation oracle_bruhat_bfs(const Mat<LaurentPoly<Fp<2>>>& g, OracleMode mode,
                                    int max_length);

struct Violation {
  std::uint64_t seed = 0;    // reproduction seed of the failing sample
  std::string check;         // which property failed
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::string field;
  int samples = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// The registered suites, in reporting order.
std::vector<std::string> suite_names();

/// Run one suite under the configuration; ParseError for unknown names.
SuiteReport run_suite(const std::string& name, const GeneratorConfig& cfg);

}  // namespace twincity
