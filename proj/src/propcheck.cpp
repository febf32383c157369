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

#include "twincity/propcheck.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <utility>

#include "twincity/city.hpp"
#include "twincity/infinity.hpp"

namespace twincity {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t x = master + (index + 1) * 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<GaussQ> default_pole_pool() {
  return {GaussQ(2), GaussQ(25), GaussQ(mpq_class(1, 20), 0), GaussQ(mpq_class(1, 3), 0)};
}

GaussQ random_gauss(Rng& rng) {
  mpq_class re(rng.range(-3, 3), rng.range(1, 3));
  re.canonicalize();
  mpq_class im(0);
  if (rng.below(4) == 0) {
    im = mpq_class(rng.range(-2, 2), rng.range(1, 2));
    im.canonicalize();
  }
  return GaussQ(re, im);
}

GaussQ random_gauss_nonzero(Rng& rng) {
  for (;;) {
    GaussQ a = random_gauss(rng);
    if (!a.is_zero()) return a;
  }
}

namespace {

template <typename T>
void shuffle_vec(Rng& rng, std::vector<T>& v) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
    std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(rng.below(i + 1))]);
}

LaurentPoly<GaussQ> random_laurent_q(Rng& rng, int lo, int hi) {
  LaurentPoly<GaussQ> p;
  const int terms = rng.range(1, 3);
  for (int k = 0; k < terms; ++k) p.add_term(rng.range(lo, hi), random_gauss(rng));
  if (p.is_zero()) p.add_term(0, GaussQ::one());
  return p;
}

struct PoolSplit {
  std::vector<GaussQ> inside, outside;
};

PoolSplit split_pool(const std::vector<GaussQ>& pool) {
  PoolSplit s;
  for (const GaussQ& c : pool) {
    if (c.is_zero()) continue;
    const mpq_class n2 = c.norm2();
    if (n2 < 1)
      s.inside.push_back(c);
    else if (n2 > 1)
      s.outside.push_back(c);
  }
  return s;
}

/// A factor with a guaranteed pole at `root` (the numerator cannot vanish
/// there because it is a single nonzero monomial and `root` is nonzero).
RationalFunction pole_factor(Rng& rng, const GaussQ& root) {
  std::map<GaussQ, int> roots;
  roots[root] = rng.range(1, 2);
  return RationalFunction::make(LaurentPoly<GaussQ>::monomial(rng.range(0, 1), random_gauss_nonzero(rng)),
                                roots);
}

LoopMatrix transvection(int n, int i, int j, const RationalFunction& f) {
  LoopMatrix m = LoopMatrix::identity(n);
  m.at(i, j) = f;
  return m;
}

Regularity random_regularity(Rng& rng) {
  switch (rng.below(4)) {
    case 0: return Regularity::algebraic;
    case 1: return Regularity::plus_only;
    case 2: return Regularity::minus_only;
    default: return Regularity::neither;
  }
}

}  // namespace

LoopMatrix random_loop_matrix(Rng& rng, int n, Regularity target, const GeneratorConfig& cfg) {
  const PoolSplit pool = split_pool(cfg.pole_pool);
  const bool need_out = target == Regularity::plus_only || target == Regularity::neither;
  const bool need_in = target == Regularity::minus_only || target == Regularity::neither;
  require(!need_out || !pool.outside.empty(), errc::empty_pool,
          "the pole pool has no point of modulus > 1");
  require(!need_in || !pool.inside.empty(), errc::empty_pool,
          "the pole pool has no point of modulus < 1");
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<int> kinds;  // 0 = polynomial factor, 1 = outside pole, 2 = inside pole
    kinds.insert(kinds.end(), static_cast<std::size_t>(rng.range(1, 3)), 0);
    if (need_out) kinds.insert(kinds.end(), static_cast<std::size_t>(rng.range(1, 2)), 1);
    if (need_in) kinds.insert(kinds.end(), static_cast<std::size_t>(rng.range(1, 2)), 2);
    shuffle_vec(rng, kinds);
    LoopMatrix m = LoopMatrix::identity(n);
    for (int kind : kinds) {
      int i = rng.below(n);
      int j = rng.below(n - 1);
      if (j >= i) ++j;
      RationalFunction f;
      if (kind == 0)
        f = RationalFunction::from_laurent(random_laurent_q(rng, cfg.exp_lo, cfg.exp_hi));
      else if (kind == 1)
        f = pole_factor(rng, pool.outside[static_cast<std::size_t>(rng.below(static_cast<int>(pool.outside.size())))]);
      else
        f = pole_factor(rng, pool.inside[static_cast<std::size_t>(rng.below(static_cast<int>(pool.inside.size())))]);
      m = m * transvection(n, i, j, f);
    }
    if (regularity_class(m) == target) return m;
  }
  fail(errc::internal_error, "random loop matrix did not reach the regularity target");
}

LoopMatrix random_iwahori(Rng& rng, int n, bool plus, const GeneratorConfig& cfg) {
  const PoolSplit pool = split_pool(cfg.pole_pool);
  LoopMatrix m = LoopMatrix::identity(n);
  const int factors = rng.range(2, 5);
  for (int f = 0; f < factors; ++f) {
    const int kind = rng.below(3);
    if (kind == 0) {
      // constant diagonal of determinant one
      LoopMatrix d = LoopMatrix::identity(n);
      GaussQ prod = GaussQ::one();
      for (int i = 0; i + 1 < n; ++i) {
        const GaussQ c = random_gauss_nonzero(rng);
        d.at(i, i) = RationalFunction::constant(c);
        prod = prod * c;
      }
      d.at(n - 1, n - 1) = RationalFunction::constant(prod.inverse());
      m = m * d;
      continue;
    }
    int i = rng.below(n);
    int j = rng.below(n - 1);
    if (j >= i) ++j;
    const int floor_depth = plus ? (i > j ? 1 : 0) : (i < j ? 1 : 0);
    const int depth = floor_depth + rng.below(2);
    RationalFunction entry = RationalFunction::from_laurent(
        LaurentPoly<GaussQ>::monomial(plus ? depth : -depth, random_gauss_nonzero(rng)));
    const auto& side = plus ? pool.outside : pool.inside;
    if (kind == 2 && !side.empty()) {
      // an extra factor, analytic on the membership side, adds poles while
      // keeping the valuation there at `depth`
      std::map<GaussQ, int> roots;
      roots[side[static_cast<std::size_t>(rng.below(static_cast<int>(side.size())))]] = 1;
      entry = entry * RationalFunction::make(LaurentPoly<GaussQ>::one(), roots);
    }
    m = m * transvection(n, i, j, entry);
  }
  require(in_iwahori(m, plus), errc::internal_error, "random Iwahori element left the subgroup");
  return m;
}

// ---------------------------------------------------------------------------
// Brute-force oracles over F_2, n = 2.

namespace {

using F2 = Fp<2>;
using F2Poly = LaurentPoly<F2>;
using F2Mat = Mat<F2Poly>;

const std::vector<std::pair<AffinePermutation, FChamber<F2>>>& oracle_ball(bool plus, int radius) {
  static std::map<std::pair<bool, int>, std::vector<std::pair<AffinePermutation, FChamber<F2>>>>
      cache;
  const auto key = std::make_pair(plus, radius);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, ball<2>(2, radius, plus)).first;
  return it->second;
}

// The Birkhoff-mode saturation table works on exactly encoded 2 x 2
// matrices over F_2 with entry support inside [-kOrW, kOrW]: one bit per
// exponent and entry, 36 bits per state.
constexpr int kOrW = 4;
constexpr int kOrBits = 2 * kOrW + 1;
constexpr std::uint32_t kOrMask = (1u << kOrBits) - 1;
constexpr int kOrGen = 4;

std::optional<std::uint32_t> encode_entry(const F2Poly& p) {
  std::uint32_t m = 0;
  for (const auto& [e, a] : p.c) {
    (void)a;  // stored coefficients are nonzero, hence 1 over F_2
    if (e < -kOrW || e > kOrW) return std::nullopt;
    m |= 1u << (e + kOrW);
  }
  return m;
}

std::optional<std::uint64_t> encode_state(const F2Mat& g) {
  std::uint64_t key = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const auto e = encode_entry(g.at(i, j));
      if (!e) return std::nullopt;
      key |= static_cast<std::uint64_t>(*e) << (kOrBits * (2 * i + j));
    }
  return key;
}

std::uint32_t entry_of(std::uint64_t s, int i, int j) {
  return static_cast<std::uint32_t>(s >> (kOrBits * (2 * i + j))) & kOrMask;
}

void set_entry(std::uint64_t& s, int i, int j, std::uint32_t m) {
  const int off = kOrBits * (2 * i + j);
  s = (s & ~(static_cast<std::uint64_t>(kOrMask) << off)) |
      (static_cast<std::uint64_t>(m) << off);
}

// t^k times a coefficient mask; false when support would leave the window.
bool shift_mask(std::uint32_t m, int k, std::uint32_t& out) {
  if (k >= 0) {
    out = (m << k) & kOrMask;
    return (out >> k) == m;
  }
  if ((m & ((1u << -k) - 1)) != 0) return false;
  out = m >> -k;
  return true;
}

// Left multiplication by I + t^k E_{ij}: row i += t^k row j.
std::optional<std::uint64_t> orbit_left(std::uint64_t s, int i, int j, int k) {
  std::uint64_t r = s;
  for (int c = 0; c < 2; ++c) {
    std::uint32_t sh = 0;
    if (!shift_mask(entry_of(s, j, c), k, sh)) return std::nullopt;
    set_entry(r, i, c, entry_of(s, i, c) ^ sh);
  }
  return r;
}

// Right multiplication by I + t^k E_{ij}: column j += t^k column i.
std::optional<std::uint64_t> orbit_right(std::uint64_t s, int i, int j, int k) {
  std::uint64_t r = s;
  for (int row = 0; row < 2; ++row) {
    std::uint32_t sh = 0;
    if (!shift_mask(entry_of(s, row, i), k, sh)) return std::nullopt;
    set_entry(r, row, j, entry_of(s, row, j) ^ sh);
  }
  return r;
}

struct BirkhoffTable {
  std::vector<AffinePermutation> cells;
  std::unordered_map<std::uint64_t, std::uint16_t> index;
};

const BirkhoffTable& birkhoff_table() {
  static const BirkhoffTable table = [] {
    BirkhoffTable t;
    t.cells = weyl_ball(2, 4);
    t.index.reserve(1u << 20);
    std::deque<std::uint64_t> queue;
    for (std::size_t c = 0; c < t.cells.size(); ++c) {
      const F2Mat rep = weyl_to_monomial_laurent<F2>(t.cells[c]);
      const auto key = encode_state(rep);
      require(key.has_value(), errc::internal_error, "oracle seed out of window");
      t.index.emplace(*key, static_cast<std::uint16_t>(c));
      queue.push_back(*key);
    }
    struct Gen {
      bool left;
      int i, j, k;
    };
    std::vector<Gen> gens;
    for (int k = 0; k <= kOrGen; ++k) gens.push_back({true, 1, 0, -k});
    for (int k = 1; k <= kOrGen; ++k) gens.push_back({true, 0, 1, -k});
    for (int k = 0; k <= kOrGen; ++k) gens.push_back({false, 0, 1, k});
    for (int k = 1; k <= kOrGen; ++k) gens.push_back({false, 1, 0, k});
    while (!queue.empty()) {
      const std::uint64_t s = queue.front();
      queue.pop_front();
      const std::uint16_t cell = t.index.at(s);
      for (const Gen& g : gens) {
        const std::optional<std::uint64_t> nxt =
            g.left ? orbit_left(s, g.i, g.j, g.k) : orbit_right(s, g.i, g.j, g.k);
        if (!nxt) continue;
        const auto [it, fresh] = t.index.emplace(*nxt, cell);
        if (fresh) {
          require(t.index.size() < (1u << 23), errc::internal_error,
                  "oracle table exceeded its bound");
          queue.push_back(*nxt);
        } else {
          require(it->second == cell, errc::internal_error, "oracle cells collided");
        }
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

AffinePermutation oracle_bruhat_bfs(const Mat<LaurentPoly<Fp<2>>>& g, OracleMode mode,
                                    int max_length) {
  require(g.n == 2, errc::rank_mismatch, "the brute-force oracle covers n = 2 only");
  validate_laurent_matrix(g);
  if (mode == OracleMode::birkhoff) {
    const BirkhoffTable& t = birkhoff_table();
    const auto key = encode_state(g);
    if (key) {
      const auto it = t.index.find(*key);
      if (it != t.index.end()) {
        const AffinePermutation& w = t.cells[it->second];
        if (w.length() <= max_length) return w;
      }
    }
    fail(errc::not_found, "label outside the oracle search bound");
  }
  const bool plus = mode == OracleMode::plus;
  for (const auto& [w, c] : oracle_ball(plus, max_length))
    if (in_iwahori(group_inverse(c.rep) * g, plus)) return w;
  fail(errc::not_found, "label outside the oracle search bound");
}

// ---------------------------------------------------------------------------
// Suites.

namespace {

using Fails = std::vector<std::pair<std::string, std::string>>;

void check(Fails& fails, bool ok, const std::string& name, const std::string& detail) {
  if (!ok) fails.emplace_back(name, detail);
}

AffinePermutation fin(const DistanceValue& d) {
  require(d.is_finite(), errc::internal_error, "expected a finite distance");
  return *d.w;
}

template <typename Body>
SuiteReport drive(const std::string& name, const GeneratorConfig& cfg, Body body) {
  SuiteReport rep;
  rep.suite = name;
  rep.field = cfg.field;
  rep.samples = cfg.samples;
  for (int k = 0; k < cfg.samples; ++k) {
    const std::uint64_t seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(k));
    Rng rng(seed);
    Fails fails;
    try {
      body(rng, k, fails);
    } catch (const kernel_error& e) {
      fails.emplace_back("unexpected_error", e.what());
    } catch (const std::exception& e) {
      fails.emplace_back("unexpected_exception", e.what());
    }
    for (auto& f : fails) rep.violations.push_back({seed, f.first, f.second});
  }
  return rep;
}

// --- wd_axioms -------------------------------------------------------------

template <std::uint32_t P>
void wd_fp_body(Rng& rng, int k, const GeneratorConfig& cfg, Fails& fails) {
  const int n = (k % 2 == 0) ? 2 : 3;
  const bool plus = rng.coin();
  using K = Fp<P>;
  const FChamber<K> x{plus, random_laurent_matrix<P>(rng, n, cfg)};
  const FChamber<K> y{plus, random_laurent_matrix<P>(rng, n, cfg)};
  const AffinePermutation id = AffinePermutation::identity(n);
  check(fails, fin(delta(x, x)) == id, "wd_reflexive", "delta(x, x) != e");
  const AffinePermutation w = fin(delta(x, y));
  check(fails, fin(delta(y, x)) == w.inverse(), "wd_inverse", "delta(y, x) != delta(x, y)^-1");
  check(fails, in_iwahori(group_inverse(x.rep) * y.rep, plus) == (w == id), "wd_equality",
        "delta identity disagrees with Iwahori membership");
  const int s = rng.below(n);
  const AffinePermutation ss = AffinePermutation::simple(n, s);
  const FChamber<K> xs = panel_move(x, s, K(rng.range(1, static_cast<int>(P) - 1)));
  check(fails, fin(delta(x, xs)) == ss, "wd_panel", "panel move is not s-adjacent");
  const AffinePermutation sw = ss.multiply(w);
  const AffinePermutation wp = fin(delta(xs, y));
  check(fails, wp == w || wp == sw, "wd_two", "delta(x', y) outside {w, sw}");
  if (sw.length() > w.length())
    check(fails, wp == sw, "wd_two_forced", "length increase did not force sw");
  const AffinePermutation shorter = sw.length() < w.length() ? sw : w;
  const AffinePermutation longer = sw.length() < w.length() ? w : sw;
  int cnt_short = 0, cnt_long = 0, cnt_other = 0;
  for (const FChamber<K>& z : panel_neighbors<P>(x, s)) {
    const AffinePermutation wz = fin(delta(z, y));
    if (wz == shorter)
      ++cnt_short;
    else if (wz == longer)
      ++cnt_long;
    else
      ++cnt_other;
  }
  check(fails, cnt_other == 0 && cnt_short == 1 && cnt_long == static_cast<int>(P), "wd_gate",
        "panel labels are not one short and p long");
}

void wd_q_body(Rng& rng, int k, const GeneratorConfig& cfg, Fails& fails) {
  const int n = (k % 2 == 0) ? 2 : 3;
  const bool plus = rng.coin();
  const Regularity analytic_cls = plus ? Regularity::plus_only : Regularity::minus_only;
  const LoopMatrix xrep = random_loop_matrix(rng, n, random_regularity(rng), cfg);
  const Chamber x{plus, xrep};
  const LoopMatrix twist =
      random_loop_matrix(rng, n, rng.coin() ? Regularity::algebraic : analytic_cls, cfg);
  const Chamber y{plus, xrep * twist};
  const AffinePermutation id = AffinePermutation::identity(n);
  check(fails, fin(delta(x, x)) == id, "wd_reflexive", "delta(x, x) != e");
  const DistanceValue dxy = delta(x, y);
  check(fails, dxy.is_finite(), "wd_same_component", "analytic twist gave an infinite distance");
  if (!dxy.is_finite()) return;
  const AffinePermutation w = *dxy.w;
  check(fails, fin(delta(y, x)) == w.inverse(), "wd_inverse", "delta(y, x) != delta(x, y)^-1");
  check(fails, in_iwahori(group_inverse(x.rep) * y.rep, plus) == w.is_identity(), "wd_equality",
        "delta identity disagrees with Iwahori membership");
  const int s = rng.below(n);
  const AffinePermutation ss = AffinePermutation::simple(n, s);
  const Chamber xs = panel_move(x, s, random_gauss(rng));
  check(fails, fin(delta(x, xs)) == ss, "wd_panel", "panel move is not s-adjacent");
  const AffinePermutation sw = ss.multiply(w);
  const AffinePermutation wp = fin(delta(xs, y));
  check(fails, wp == w || wp == sw, "wd_two", "delta(x', y) outside {w, sw}");
  if (sw.length() > w.length())
    check(fails, wp == sw, "wd_two_forced", "length increase did not force sw");
  // independent pair: finiteness of the distance must be symmetric
  const Chamber z{plus, random_loop_matrix(rng, n, random_regularity(rng), cfg)};
  const DistanceValue dxz = delta(x, z);
  const DistanceValue dzx = delta(z, x);
  check(fails, dxz.is_finite() == dzx.is_finite(), "wd_symmetric_finiteness",
        "finiteness of delta is not symmetric");
  if (dxz.is_finite())
    check(fails, *dzx.w == dxz.w->inverse(), "wd_inverse", "delta(z, x) != delta(x, z)^-1");
  // minimal gallery: letters are simple, multiply to w, count = length
  if (w.length() <= 12) {
    const std::vector<Chamber> gal = gallery(x, y);
    bool ok = gal.size() == static_cast<std::size_t>(w.length()) + 1 &&
              chambers_equal(gal.front(), x) && chambers_equal(gal.back(), y);
    AffinePermutation acc = id;
    for (std::size_t i = 0; ok && i + 1 < gal.size(); ++i) {
      const AffinePermutation step = fin(delta(gal[i], gal[i + 1]));
      if (step.length() != 1) {
        ok = false;
        break;
      }
      acc = acc.multiply(step);
    }
    ok = ok && acc == w;
    check(fails, ok, "wd_gallery", "gallery letters do not realize the distance");
  }
}

// --- twin_axioms -----------------------------------------------------------

void twin_body(Rng& rng, int k, const GeneratorConfig& cfg, Fails& fails) {
  const int n = (k % 2 == 0) ? 2 : 3;
  const Chamber x{true, random_loop_matrix(rng, n, random_regularity(rng), cfg)};
  const Chamber y{false, random_loop_matrix(rng, n, random_regularity(rng), cfg)};
  const AffinePermutation w = codelta(x, y);
  check(fails, codelta(y, x) == w.inverse(), "twin_inverse", "codelta(y, x) != codelta(x, y)^-1");
  const int s = rng.below(n);
  const AffinePermutation ss = AffinePermutation::simple(n, s);
  const AffinePermutation ws = w.multiply(ss);
  const Chamber z = codistance_raiser(x, y, s);
  check(fails, fin(delta(y, z)) == ss, "twin_raiser_panel", "raiser left the s-panel");
  check(fails, codelta(x, z) == ws, "twin_raiser", "raiser codistance is not w*s");
  const Chamber zp = panel_move(y, s, random_gauss(rng));
  if (ws.length() < w.length()) {
    check(fails, codelta(x, zp) == ws, "twin_descent",
          "length drop did not force w*s across the panel");
  } else if (!chambers_equal(zp, z)) {
    check(fails, codelta(x, zp) == w, "twin_unique_raiser",
          "a second panel member also raised the codistance");
  }
  const Chamber z2 = codistance_raiser(y, x, s);
  check(fails, fin(delta(x, z2)) == ss, "twin_raiser_panel", "mirrored raiser left the s-panel");
  check(fails, codelta(y, z2) == w.inverse().multiply(ss), "twin_raiser_mirror",
        "mirrored raiser codistance is not w^-1*s");
  check(fails, is_opposite(x, Chamber{false, x.rep}), "twin_opposite",
        "a chamber is not opposite its mirror");
}

// --- partition ---------------------------------------------------------------

void partition_q_body(Rng& rng, int k, const GeneratorConfig& cfg, Fails& fails) {
  const int n = (k % 2 == 0) ? 2 : 3;
  const LoopMatrix g = random_loop_matrix(rng, n, random_regularity(rng), cfg);
  const AffinePermutation bl = birkhoff(g).label();
  for (int r = 0; r < 20; ++r) {
    const LoopMatrix h =
        random_iwahori(rng, n, false, cfg) * g * random_iwahori(rng, n, true, cfg);
    if (birkhoff(h).label() != bl) {
      fails.emplace_back("partition_birkhoff", "Birkhoff label changed under perturbation " +
                                                   std::to_string(r));
      break;
    }
  }
  for (const bool plus : {true, false}) {
    const Place place = plus ? Place::at_zero : Place::at_infinity;
    if (analytic_at(g, place)) {
      const AffinePermutation l = rational_bruhat(g, plus).label();
      for (int r = 0; r < 5; ++r) {
        const LoopMatrix h =
            random_iwahori(rng, n, plus, cfg) * g * random_iwahori(rng, n, plus, cfg);
        if (rational_bruhat(h, plus).label() != l) {
          fails.emplace_back("partition_bruhat", "Bruhat label changed under perturbation");
          break;
        }
      }
      check(fails, rational_bruhat(group_inverse(g), plus).label() == l.inverse(),
            "partition_inverse", "Bruhat label of the inverse is not the inverse label");
    } else {
      try {
        rational_bruhat(g, plus);
        fails.emplace_back("partition_regularity", "missing WrongRegularity rejection");
      } catch (const kernel_error& e) {
        if (e.code() != errc::wrong_regularity)
          fails.emplace_back("partition_regularity", e.what());
      }
    }
  }
}

template <std::uint32_t P>
Mat<LaurentPoly<Fp<P>>> random_fp_iwahori(Rng& rng, int n, bool plus) {
  using Poly = LaurentPoly<Fp<P>>;
  Mat<Poly> m = Mat<Poly>::identity(n);
  const int factors = rng.range(2, 5);
  for (int f = 0; f < factors; ++f) {
    if (rng.below(4) == 0 && P > 2) {
      Mat<Poly> d = Mat<Poly>::identity(n);
      Fp<P> prod = Fp<P>::one();
      for (int i = 0; i + 1 < n; ++i) {
        const Fp<P> c(rng.range(1, static_cast<int>(P) - 1));
        d.at(i, i) = Poly::constant(c);
        prod = prod * c;
      }
      d.at(n - 1, n - 1) = Poly::constant(prod.inverse());
      m = m * d;
      continue;
    }
    int i = rng.below(n);
    int j = rng.below(n - 1);
    if (j >= i) ++j;
    const int floor_depth = plus ? (i > j ? 1 : 0) : (i < j ? 1 : 0);
    const int depth = floor_depth + rng.below(2);
    Mat<Poly> e = Mat<Poly>::identity(n);
    e.at(i, j) = Poly::monomial(plus ? depth : -depth, Fp<P>(rng.range(1, static_cast<int>(P) - 1)));
    m = m * e;
  }
  require(in_iwahori(m, plus), errc::internal_error, "random Iwahori element left the subgroup");
  return m;
}

template <std::uint32_t P>
void partition_fp_body(Rng& rng, int k, const GeneratorConfig& cfg, Fails& fails) {
  const int n = (k % 2 == 0) ? 2 : 3;
  const auto g = random_laurent_matrix<P>(rng, n, cfg);
  const AffinePermutation bl = birkhoff_laurent(g).elim.label;
  const AffinePermutation lp = bruhat_laurent(g, true).elim.label;
  const AffinePermutation lm = bruhat_laurent(g, false).elim.label;
  for (int r = 0; r < 5; ++r) {
    const auto ip = random_fp_iwahori<P>(rng, n, true);
    const auto ip2 = random_fp_iwahori<P>(rng, n, true);
    const auto im = random_fp_iwahori<P>(rng, n, false);
    const auto im2 = random_fp_iwahori<P>(rng, n, false);
    check(fails, birkhoff_laurent(im * g * ip).elim.label == bl, "partition_birkhoff",
          "Birkhoff label changed under perturbation");
    check(fails, bruhat_laurent(ip2 * g * ip, true).elim.label == lp, "partition_bruhat",
          "positive Bruhat label changed under perturbation");
    check(fails, bruhat_laurent(im * g * im2, false).elim.label == lm, "partition_bruhat",
          "negative Bruhat label changed under perturbation");
  }
  check(fails, bruhat_laurent(group_inverse(g), true).elim.label == lp.inverse(),
        "partition_inverse", "Bruhat label of the inverse is not the inverse label");
  if constexpr (P == 2) {
    if (n == 2) {
      const std::vector<std::pair<OracleMode, AffinePermutation>> modes = {
          {OracleMode::plus, lp}, {OracleMode::minus, lm}, {OracleMode::birkhoff, bl}};
      for (const auto& [mode, expected] : modes) {
        try {
          check(fails, oracle_bruhat_bfs(g, mode, 4) == expected, "partition_oracle",
                "oracle label disagrees with the elimination label");
        } catch (const kernel_error& e) {
          if (e.code() != errc::not_found) throw;  // out of oracle bounds: skip
        }
      }
    }
  }
}

// --- isometry ----------------------------------------------------------------

void isometry_body(Rng& rng, int k, const GeneratorConfig& cfg, Fails& fails) {
  const int n = (k % 2 == 0) ? 2 : 3;
  const bool plus = rng.coin();
  const Regularity analytic_cls = plus ? Regularity::plus_only : Regularity::minus_only;
  const Chamber x{plus, random_loop_matrix(rng, n, random_regularity(rng), cfg)};
  const Chamber y{plus, rng.coin()
                            ? x.rep * random_loop_matrix(rng, n,
                                                         rng.coin() ? Regularity::algebraic
                                                                    : analytic_cls,
                                                         cfg)
                            : random_loop_matrix(rng, n, random_regularity(rng), cfg)};
  const LoopMatrix h = random_loop_matrix(rng, n, random_regularity(rng), cfg);
  const DistanceValue d0 = delta(x, y);
  check(fails, delta(Chamber{plus, h * x.rep}, Chamber{plus, h * y.rep}) == d0, "isometry_delta",
        "left translation changed the Weyl distance");
  const Chamber x2{plus, x.rep * random_iwahori(rng, n, plus, cfg)};
  check(fails, delta(x2, y) == d0, "isometry_representative",
        "the Weyl distance depends on the representative");
  const Chamber u{true, random_loop_matrix(rng, n, random_regularity(rng), cfg)};
  const Chamber v{false, random_loop_matrix(rng, n, random_regularity(rng), cfg)};
  const AffinePermutation cw = codelta(u, v);
  check(fails, codelta(Chamber{true, h * u.rep}, Chamber{false, h * v.rep}) == cw,
        "isometry_codelta", "left translation changed the codistance");
  check(fails,
        codelta(Chamber{true, u.rep * random_iwahori(rng, n, true, cfg)},
                Chamber{false, v.rep * random_iwahori(rng, n, false, cfg)}) == cw,
        "isometry_corepresentative", "the codistance depends on the representatives");
  const LoopMatrix hh = rng.coin() ? random_iwahori(rng, n, plus, cfg)
                                   : random_loop_matrix(rng, n, random_regularity(rng), cfg);
  check(fails, chambers_equal(Chamber{plus, hh}, base_chamber(n, plus)) == in_iwahori(hh, plus),
        "isometry_stabilizer", "the stabilizer of the base chamber is not the Iwahori subgroup");
}

// --- apartment ---------------------------------------------------------------

void apartment_body(Rng& rng, int k, const GeneratorConfig& cfg, Fails& fails) {
  const int n = (k % 2 == 0) ? 2 : 3;
  const LoopMatrix xrep = random_loop_matrix(rng, n, random_regularity(rng), cfg);
  const Chamber xx{true, xrep * random_iwahori(rng, n, true, cfg)};
  const Chamber yy{false, xrep * random_iwahori(rng, n, false, cfg)};
  const TwinApartment a = twin_apartment(xx, yy);
  check(fails, a.contains(xx) && a.contains(yy), "apartment_span",
        "the defining chambers are not members");
  check(fails, a.contains(a.positive_base()) && a.contains(a.negative_base()), "apartment_base",
        "the base chambers are not members");
  const std::vector<AffinePermutation> ball2 = weyl_ball(n, 2);
  const AffinePermutation w = ball2[static_cast<std::size_t>(rng.below(static_cast<int>(ball2.size())))];
  const Chamber cp = a.member(w, true);
  const Chamber cm = a.member(w, false);
  check(fails, a.contains(cp) && a.contains(cm), "apartment_member",
        "an enumerated member fails the membership predicate");
  check(fails, fin(delta(a.positive_base(), cp)) == w, "apartment_delta",
        "the member at w is not at distance w");
  check(fails, codelta(a.negative_base(), cp) == w, "apartment_codelta",
        "the member at w is not at codistance w");
  const std::vector<Chamber> gal = gallery(a.positive_base(), cp);
  bool inside = true;
  for (const Chamber& c : gal) inside = inside && a.contains(c);
  check(fails, inside, "apartment_convex", "a minimal gallery left the twin apartment");
  check(fails, a.base.has_value(), "apartment_aligned",
        "no aligned base for an opposite pair");
  const Chamber ybad{false, xrep * weyl_to_monomial(AffinePermutation::simple(n, rng.below(n)))};
  try {
    twin_apartment(xx, ybad);
    fails.emplace_back("apartment_not_opposite", "accepted a non-opposite pair");
  } catch (const kernel_error& e) {
    if (e.code() != errc::not_opposite) fails.emplace_back("apartment_not_opposite", e.what());
  }
  // A pair with a common representative: the enumerator must land on the
  // translated monomial chambers, the aligned base must be recovered, and
  // the two boundary apartments must match chamber by chamber.
  const TwinApartment a2 = twin_apartment(Chamber{true, xrep}, Chamber{false, xrep});
  check(fails, a2.base.has_value(), "apartment_aligned",
        "no aligned base for a common-representative pair");
  check(fails, chambers_equal(a2.member(w, true), Chamber{true, xrep * weyl_to_monomial(w)}),
        "apartment_monomial", "the enumerated member is not the translated monomial chamber");
  check(fails, boundary_pair_check(a2), "apartment_boundary",
        "the twin apartment fails the boundary pairing");
}

// --- city_equivalence --------------------------------------------------------

void city_body(Rng& rng, int k, const GeneratorConfig& cfg, Fails& fails) {
  const int n = (k % 2 == 0) ? 2 : 3;
  const bool sign = rng.coin();
  const Regularity analytic_cls = sign ? Regularity::plus_only : Regularity::minus_only;
  const Regularity bad_cls = sign ? Regularity::minus_only : Regularity::plus_only;
  const LoopMatrix x = random_loop_matrix(rng, n, random_regularity(rng), cfg);
  const LoopMatrix a1 =
      random_loop_matrix(rng, n, rng.coin() ? Regularity::algebraic : analytic_cls, cfg);
  const LoopMatrix a2 =
      random_loop_matrix(rng, n, rng.coin() ? Regularity::algebraic : analytic_cls, cfg);
  const Chamber cx{sign, x};
  const Chamber cy{sign, x * a1};
  const Chamber cz{sign, x * a1 * a2};
  check(fails, same_component(cx, cy) && same_component(cy, cz) && same_component(cx, cz),
        "city_equivalence", "analytic twists broke the component relation");
  check(fails, same_component(cy, cx), "city_symmetric", "the component relation is asymmetric");
  check(fails, delta(cx, cy).is_finite(), "city_finite_delta",
        "same-component chambers at infinite distance");
  const LoopMatrix bad = random_loop_matrix(rng, n, bad_cls, cfg);
  const Chamber cw{sign, x * bad};
  check(fails, !same_component(cx, cw), "city_components", "a wrong-side twist stayed inside");
  check(fails, !delta(cx, cw).is_finite(), "city_infinite_delta",
        "cross-component chambers at finite distance");
  const std::vector<Chamber> registry{cx, cw};
  check(fails, component_of(cy, registry) == 0, "city_registry",
        "component lookup missed the base component");
  check(fails, component_of(Chamber{sign, x * bad * a1}, registry) == 1, "city_registry",
        "component lookup missed the twisted component");
  try {
    component_of(Chamber{!sign, x}, registry);
    fails.emplace_back("city_not_found", "component lookup accepted a wrong-sign chamber");
  } catch (const kernel_error& e) {
    if (e.code() != errc::not_found) fails.emplace_back("city_not_found", e.what());
  }
  const Chamber other{!sign, random_loop_matrix(rng, n, random_regularity(rng), cfg)};
  const AffinePermutation cross = cross_codistance(cx, other);
  (void)cross;  // totality: finite for every opposite-sign pair
  GeneratorConfig narrow = cfg;
  narrow.pole_pool = {GaussQ(2)};
  try {
    random_loop_matrix(rng, n, Regularity::minus_only, narrow);
    fails.emplace_back("city_empty_pool", "missing EmptyPool rejection");
  } catch (const kernel_error& e) {
    if (e.code() != errc::empty_pool) fails.emplace_back("city_empty_pool", e.what());
  }
}

// --- ultrametric -------------------------------------------------------------

void ultrametric_body(Rng& rng, int k, const GeneratorConfig& cfg, Fails& fails) {
  const int n = (k % 2 == 0) ? 2 : 3;
  const LoopMatrix x = random_loop_matrix(rng, n, random_regularity(rng), cfg);
  const LoopMatrix t1 = random_loop_matrix(rng, n, random_regularity(rng), cfg);
  const LoopMatrix t2 = random_loop_matrix(rng, n, random_regularity(rng), cfg);
  const LoopMatrix b1 = x;
  const LoopMatrix b2 = x * t1;
  const LoopMatrix b3 = x * t1 * t2;
  const CityMetricValue d12 = pseudo_distance(b1, b2);
  const CityMetricValue d23 = pseudo_distance(b2, b3);
  const CityMetricValue d13 = pseudo_distance(b1, b3);
  check(fails, pseudo_distance(b2, b1) == d12, "city_metric_symmetry",
        "the pseudo-distance is asymmetric");
  check(fails, pseudo_distance(b1, b1).is_zero(), "city_metric_self",
        "self pseudo-distance is not zero");
  const auto ord = [](const CityMetricValue& v) {
    return v.nu ? static_cast<long long>(*v.nu) : LLONG_MAX;
  };
  check(fails, ord(d13) >= std::min(ord(d12), ord(d23)), "city_ultrametric",
        "the ultrametric inequality failed");
  check(fails, pseudo_distance(Chamber{true, b1}, Chamber{true, b2}) == d12,
        "city_metric_overload", "matrix and chamber pseudo-distances disagree");
  std::map<GaussQ, int> circle;
  circle[GaussQ::one()] = 1;
  const LoopMatrix circ =
      transvection(n, 0, 1, RationalFunction::make(LaurentPoly<GaussQ>::one(), circle));
  try {
    pseudo_distance(LoopMatrix::identity(n), circ);
    fails.emplace_back("city_pole_on_circle", "missing PoleOnCircle rejection");
  } catch (const kernel_error& e) {
    if (e.code() != errc::pole_on_circle) fails.emplace_back("city_pole_on_circle", e.what());
  }
}

// --- counting ----------------------------------------------------------------

template <std::uint32_t P>
void counting_check(SuiteReport& rep, std::uint64_t seed, int n, int radius) {
  const auto b = ball<P>(n, radius);
  std::map<std::vector<int64_t>, std::vector<std::size_t>> cells;
  for (std::size_t i = 0; i < b.size(); ++i) cells[b[i].first.window].push_back(i);
  for (const AffinePermutation& w : weyl_ball(n, radius)) {
    long long expect = 1;
    for (int64_t i = 0; i < w.length(); ++i) expect *= static_cast<long long>(P);
    const auto it = cells.find(w.window);
    const long long got = it == cells.end() ? 0 : static_cast<long long>(it->second.size());
    if (got != expect)
      rep.violations.push_back({seed, "counting_cell",
                                "cell " + w.str() + ": " + std::to_string(got) + " != " +
                                    std::to_string(expect)});
    if (it == cells.end()) continue;
    // membership construction agrees with the computed label
    const auto base = base_fchamber<Fp<P>>(n, true);
    for (const std::size_t i : it->second)
      if (fin(delta(base, b[i].second)) != w) {
        rep.violations.push_back({seed, "counting_label", "ball label mismatch at " + w.str()});
        break;
      }
    // pairwise distinct chambers within the cell
    bool distinct = true;
    for (std::size_t p = 0; p < it->second.size() && distinct; ++p)
      for (std::size_t q = p + 1; q < it->second.size() && distinct; ++q)
        distinct = !chambers_equal(b[it->second[p]].second, b[it->second[q]].second);
    if (!distinct)
      rep.violations.push_back({seed, "counting_distinct", "repeated chamber in cell " + w.str()});
  }
}

SuiteReport counting_suite(const GeneratorConfig& cfg) {
  SuiteReport rep;
  rep.suite = "counting";
  rep.field = cfg.field;
  rep.samples = 1;
  if (cfg.field == "F3") {
    counting_check<3>(rep, cfg.seed, 2, 2);
    counting_check<3>(rep, cfg.seed, 3, 1);
  } else {
    counting_check<2>(rep, cfg.seed, 2, 3);
    counting_check<2>(rep, cfg.seed, 3, 2);
  }
  return rep;
}

// --- infinity_axioms ---------------------------------------------------------

AffinePermutation transposition(int n, int i) {  // swaps i and i+1, 1-indexed
  std::vector<int64_t> win(static_cast<std::size_t>(n));
  std::iota(win.begin(), win.end(), int64_t{1});
  std::swap(win[static_cast<std::size_t>(i - 1)], win[static_cast<std::size_t>(i)]);
  return AffinePermutation::make(n, win);
}

Flag translate_flag(const Flag& f, const LoopMatrix& a) {
  LoopMatrix rows(f.n);
  for (int i = 0; i < f.n; ++i)
    for (int j = 0; j < f.n; ++j) rows.at(i, j) = RationalFunction::from_laurent(f.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return make_flag(rows * a);
}

LoopMatrix sector_stable_twist(Rng& rng, int n, const AffinePermutation& u) {
  std::vector<int> lam(static_cast<std::size_t>(n), 0);
  int sum = 0;
  for (int i = 0; i + 1 < n; ++i) {
    lam[static_cast<std::size_t>(i)] = rng.range(-2, 2);
    sum += lam[static_cast<std::size_t>(i)];
  }
  lam[static_cast<std::size_t>(n - 1)] = -sum;
  LoopMatrix m = LoopMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    m.at(i, i) = RationalFunction::from_laurent(
        LaurentPoly<GaussQ>::monomial(lam[static_cast<std::size_t>(i)], GaussQ::one()));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng.coin()) {
        const int ra = static_cast<int>(u.window[static_cast<std::size_t>(a)]) - 1;
        const int rb = static_cast<int>(u.window[static_cast<std::size_t>(b)]) - 1;
        LoopMatrix e = LoopMatrix::identity(n);
        e.at(ra, rb) = RationalFunction::constant(random_gauss(rng));
        m = m * e;
      }
  return m;
}

void infinity_body(Rng& rng, int k, const GeneratorConfig& cfg, Fails& fails) {
  const int n = (k % 2 == 0) ? 2 : 3;
  const LoopMatrix g = random_loop_matrix(rng, n, random_regularity(rng), cfg);
  const LoopMatrix h = random_loop_matrix(rng, n, random_regularity(rng), cfg);
  const Flag f = make_flag(g);
  const Flag gg = make_flag(h);
  const AffinePermutation id = AffinePermutation::identity(n);
  check(fails, relative_position(f, f) == id, "infinity_reflexive", "relpos(F, F) != e");
  const AffinePermutation w = relative_position(f, gg);
  check(fails, w.is_finite(), "infinity_spherical", "relative position is not finite");
  check(fails, relative_position(gg, f) == w.inverse(), "infinity_inverse",
        "relpos(G, F) != relpos(F, G)^-1");
  const LoopMatrix a = random_loop_matrix(rng, n, random_regularity(rng), cfg);
  check(fails, relative_position(translate_flag(f, a), translate_flag(gg, a)) == w,
        "infinity_invariance", "relative position moved under a common translation");
  const std::vector<AffinePermutation> perms = finite_permutations(n);
  const AffinePermutation u = perms[static_cast<std::size_t>(rng.below(static_cast<int>(perms.size())))];
  const AffinePermutation v = perms[static_cast<std::size_t>(rng.below(static_cast<int>(perms.size())))];
  check(fails,
        relative_position(coordinate_flag(n, u), coordinate_flag(n, v)) == u.inverse().multiply(v),
        "infinity_coordinates", "coordinate flags have the wrong relative position");
  const int i = rng.range(1, n - 1);
  GaussQ alpha = rng.coin() ? GaussQ::zero() : random_gauss(rng);
  GaussQ beta = random_gauss(rng);
  if (alpha.is_zero() && beta.is_zero()) beta = GaussQ::one();
  const Flag gp = panel_member(gg, i, alpha, beta);
  const AffinePermutation wp = relative_position(f, gp);
  const AffinePermutation wsig = w.multiply(transposition(n, i));
  check(fails, wp == w || wp == wsig, "infinity_panel", "panel member outside {w, w*sigma}");
  const Flag proj = panel_projection(f, gg, i);
  const AffinePermutation& shorter = wsig.length() < w.length() ? wsig : w;
  check(fails, relative_position(f, proj) == shorter, "infinity_projection",
        "the panel projection is not the gate");
  const AffinePermutation dir = perms[static_cast<std::size_t>(rng.below(static_cast<int>(perms.size())))];
  const Flag sector = sector_to_flag(g, dir);
  check(fails, flags_equal(sector, sector_to_flag(g * sector_stable_twist(rng, n, dir), dir)),
        "infinity_sector", "the sector flag moved under a stabilizing twist");
  check(fails, boundary_pair_check(g, g), "infinity_boundary_true",
        "a shared base failed the boundary pairing");
  const LoopMatrix bad =
      transvection(n, 0, 1, RationalFunction::constant(random_gauss_nonzero(rng)));
  check(fails, !boundary_pair_check(g, g * bad), "infinity_boundary_false",
        "a sheared base passed the boundary pairing");
}

// --- flip ----------------------------------------------------------------------

void flip_body(Rng& rng, int k, const GeneratorConfig& cfg, Fails& fails) {
  const int n = (k % 2 == 0) ? 2 : 3;
  const bool plus = rng.coin();
  const Regularity analytic_cls = plus ? Regularity::plus_only : Regularity::minus_only;
  const Chamber x{plus, random_loop_matrix(rng, n, random_regularity(rng), cfg)};
  const Chamber fx = bn_flip(x);
  check(fails, fx.plus == !plus, "flip_sign", "the flip kept the sign");
  check(fails, chambers_equal(bn_flip(fx), x), "flip_involution", "the flip is not involutive");
  const LoopMatrix h = random_iwahori(rng, n, plus, cfg);
  check(fails, in_iwahori(bn_flip_matrix(h), !plus), "flip_iwahori",
        "the flip did not exchange the Iwahori subgroups");
  const Chamber y{plus, rng.coin()
                            ? x.rep * random_loop_matrix(rng, n,
                                                         rng.coin() ? Regularity::algebraic
                                                                    : analytic_cls,
                                                         cfg)
                            : random_loop_matrix(rng, n, random_regularity(rng), cfg)};
  const DistanceValue d = delta(x, y);
  const DistanceValue fd = delta(bn_flip(x), bn_flip(y));
  if (d.is_finite()) {
    check(fails, fd.is_finite() && *fd.w == *d.w, "flip_distance",
          "the flip did not preserve the Weyl distance");
    const LoopMatrix mw = weyl_to_monomial(*d.w);
    check(fails, monomial_to_weyl(bn_flip_matrix(mw)) == *d.w, "flip_label",
          "the flip moved a monomial off its own cell");
  } else {
    check(fails, !fd.is_finite(), "flip_distance", "the flip changed distance finiteness");
  }
  const Chamber u{true, random_loop_matrix(rng, n, random_regularity(rng), cfg)};
  const Chamber v{false, random_loop_matrix(rng, n, random_regularity(rng), cfg)};
  check(fails, codelta(bn_flip(u), bn_flip(v)) == codelta(u, v), "flip_codistance",
        "the flip did not preserve the codistance");
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"wd_axioms", "twin_axioms", "partition",   "isometry",        "apartment",
          "city_equivalence", "ultrametric", "counting", "infinity_axioms", "flip"};
}

SuiteReport run_suite(const std::string& name, const GeneratorConfig& cfg) {
  if (name == "wd_axioms") {
    if (cfg.field == "F2")
      return drive(name, cfg, [&cfg](Rng& rng, int k, Fails& f) { wd_fp_body<2>(rng, k, cfg, f); });
    if (cfg.field == "F3")
      return drive(name, cfg, [&cfg](Rng& rng, int k, Fails& f) { wd_fp_body<3>(rng, k, cfg, f); });
    return drive(name, cfg, [&cfg](Rng& rng, int k, Fails& f) { wd_q_body(rng, k, cfg, f); });
  }
  if (name == "twin_axioms")
    return drive(name, cfg, [&cfg](Rng& rng, int k, Fails& f) { twin_body(rng, k, cfg, f); });
  if (name == "partition") {
    if (cfg.field == "F2")
      return drive(name, cfg,
                   [&cfg](Rng& rng, int k, Fails& f) { partition_fp_body<2>(rng, k, cfg, f); });
    if (cfg.field == "F3")
      return drive(name, cfg,
                   [&cfg](Rng& rng, int k, Fails& f) { partition_fp_body<3>(rng, k, cfg, f); });
    return drive(name, cfg, [&cfg](Rng& rng, int k, Fails& f) { partition_q_body(rng, k, cfg, f); });
  }
  if (name == "isometry")
    return drive(name, cfg, [&cfg](Rng& rng, int k, Fails& f) { isometry_body(rng, k, cfg, f); });
  if (name == "apartment")
    return drive(name, cfg, [&cfg](Rng& rng, int k, Fails& f) { apartment_body(rng, k, cfg, f); });
  if (name == "city_equivalence")
    return drive(name, cfg, [&cfg](Rng& rng, int k, Fails& f) { city_body(rng, k, cfg, f); });
  if (name == "ultrametric")
    return drive(name, cfg, [&cfg](Rng& rng, int k, Fails& f) { ultrametric_body(rng, k, cfg, f); });
  if (name == "counting") return counting_suite(cfg);
  if (name == "infinity_axioms")
    return drive(name, cfg, [&cfg](Rng& rng, int k, Fails& f) { infinity_body(rng, k, cfg, f); });
  if (name == "flip")
    return drive(name, cfg, [&cfg](Rng& rng, int k, Fails& f) { flip_body(rng, k, cfg, f); });
  fail(errc::parse_error, "unknown suite: " + name);
}

}  // namespace twincity
