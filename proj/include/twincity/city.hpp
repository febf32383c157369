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
// The city structure on top of the twin building: chambers over the
// rational-function field fall into components (one building per
// component), Weyl distances are finite exactly within a component, and
// the codistance connects components of opposite signs.  Components carry
// an ultrametric pseudo-distance read off the pole annuli of the
// connecting twist.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twincity/building.hpp"

namespace twincity {

/// Two equal-sign chambers lie in the same component exactly when their
/// transition matrix is analytic on the sign's side of the unit circle.
bool same_component(const Chamber& x, const Chamber& y);

/// Index of the registered component containing c; NotFound if none does.
int component_of(const Chamber& c, const std::vector<Chamber>& registry);

/// Value of the pseudo-distance between components: d = e^{-nu}, where nu
/// is the annulus grade of the connecting twist (the largest symmetric
/// annulus around the unit circle that the twist's poles avoid).  A twist
/// without any pole has nu = infinity, i.e. distance zero.
struct CityMetricValue {
  std::optional<unsigned> nu;

  bool is_zero() const { return !nu.has_value(); }
  bool operator==(const CityMetricValue& o) const { return nu == o.nu; }

  /// Exact symbolic value: "e^-3", "1" for nu = 0, "0" for infinite grade.
  std::string d_str() const;
  /// Advisory floating-point approximation of e^{-nu}.
  double d_approx() const;
};

/// Pseudo-distance between the components of two base twists (or of two
/// chambers' representatives).  Symmetric and ultrametric: the grade of a
/// product is at least the minimum of the grades.
CityMetricValue pseudo_distance(const LoopMatrix& b1, const LoopMatrix& b2);
CityMetricValue pseudo_distance(const Chamber& x, const Chamber& y);

/// Codistance across components: defined for every opposite-sign pair,
/// however far apart their components are.
AffinePermutation cross_codistance(const Chamber& x, const Chamber& y);

}  // namespace twincity
