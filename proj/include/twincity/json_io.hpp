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

#include <string>
#include <vector>

#include <json.hpp>

#include "twincity/bruhat.hpp"
#include "twincity/building.hpp"
#include "twincity/city.hpp"
#include "twincity/infinity.hpp"
#include "twincity/propcheck.hpp"

namespace twincity {

/// Insertion-ordered JSON so that serialized output is byte-stable.
using json = nlohmann::ordered_json;

/// Scalar encoding: exact integers as JSON integers, other rationals as
/// decimal strings "num/den", Gaussian rationals as {"re": ..., "im": ...}
/// whose fields are again integers or rational strings.
GaussQ parse_scalar(const json& j);
json scalar_to_json(const GaussQ& a);

/// Laurent polynomials as lists of [exponent, scalar] pairs.
LaurentPoly<GaussQ> parse_laurent(const json& j);
json laurent_to_json(const LaurentPoly<GaussQ>& p);

/// Matrix entries: a bare scalar, a Laurent list, or {"num": ..., "den": ...}
/// where den is either a list of linear factors [[root, order], ...] or
/// {"coeffs": [[exponent, scalar], ...]} for an expanded polynomial that the
/// parser must split (NonSplitDenominator when it cannot).
RationalFunction parse_entry(const json& j);
json entry_to_json(const RationalFunction& f);

/// Validated determinant-one matrix from a JSON row list (optionally wrapped
/// as {"schema": 1, "matrix": rows}).  Errors carry the offending entry:
/// ParseError, DeterminantNotOne, NonSplitDenominator, PoleOnCircle.
LoopMatrix parse_matrix(const json& j);
json matrix_to_json(const LoopMatrix& m);

/// Chamber files: {"sign": "+" | "-", "matrix": rows}; a bare matrix is
/// accepted and defaults to the plus sign.
Chamber parse_chamber(const json& j);
json chamber_to_json(const Chamber& c);

/// Component registry: a list of chamber (or bare matrix) entries, optionally
/// wrapped as {"components": [...]}.
std::vector<Chamber> parse_registry(const json& j);

/// Points at infinity: a full-rank list of basis rows (entries per the ring
/// encoding), optionally wrapped as {"rows": rows}.  Rows need not have
/// determinant one; degenerate input raises DegenerateFlag.
Flag parse_flag(const json& j);

AffinePermutation parse_permutation(const json& j);
json permutation_to_json(const AffinePermutation& w);

/// Truncated series: {"base_exponent": v, "coefficients": [...], "direction":
/// "at_zero" | "at_infinity"}.
json series_to_json(const Series<GaussQ>& s, Place direction);
json series_matrix_to_json(const Mat<Series<GaussQ>>& m, Place direction);
json laurent_matrix_to_json(const LaurentMat<GaussQ>& m);

/// Weyl distance value: {"finite": window} or the string "infinite".
json distance_to_json(const DistanceValue& d);

/// Component pseudo-distance: {"nu": grade | "inf", "d": exact symbolic
/// value}; with_approx adds the advisory floating "d_approx".
json city_metric_to_json(const CityMetricValue& v, bool with_approx);

json report_to_json(const SuiteReport& r);

/// Parse a UTF-8 JSON file; ParseError on missing files or malformed JSON.
json load_json_file(const std::string& path);

}  // namespace twincity
