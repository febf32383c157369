#pragma once

// Shared helpers for the twincity test binaries: compact builders for exact
// scalars, rational-function matrices and chambers.  Matrices are written as
// JSON literals and routed through the public reader so fixtures stay short.

#include <cstdint>
#include <string>
#include <vector>

#include "twincity/building.hpp"
#include "twincity/json_io.hpp"

namespace twincity::testutil {

/// Rational Gaussian scalar num/den.
inline GaussQ gq(long long num, long long den = 1) {
  mpq_class q(static_cast<long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return GaussQ(q, mpq_class(0));
}

/// 1 / (t - root)^order.
inline RationalFunction pole(const GaussQ& root, int order = 1) {
  return RationalFunction::make(LaurentPoly<GaussQ>::one(), {{root, order}});
}

/// Matrix literal via the JSON reader: entries are scalars ("3/4"), Laurent
/// term lists [[e, a], ...], or {"num": ..., "den": ...} objects.
inline LoopMatrix mat(const std::string& text) {
  return parse_matrix(json::parse(text));
}

inline Chamber ch(bool plus, const std::string& text) {
  return make_chamber(plus, mat(text));
}

inline AffinePermutation perm(int n, const std::vector<std::int64_t>& win) {
  return AffinePermutation::make(n, win);
}

}  // namespace twincity::testutil
