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

#include "twincity/city.hpp"

#include <cmath>

namespace twincity {

bool same_component(const Chamber& x, const Chamber& y) {
  require(x.plus == y.plus, errc::sign_mismatch, "components compare equal signs only");
  LoopMatrix h = group_inverse(x.rep) * y.rep;
  return analytic_at(h, x.plus ? Place::at_zero : Place::at_infinity);
}

int component_of(const Chamber& c, const std::vector<Chamber>& registry) {
  for (size_t i = 0; i < registry.size(); ++i) {
    if (registry[i].plus != c.plus) continue;
    if (same_component(registry[i], c)) return static_cast<int>(i);
  }
  fail(errc::not_found, "chamber belongs to no registered component");
}

CityMetricValue pseudo_distance(const LoopMatrix& b1, const LoopMatrix& b2) {
  LoopMatrix q = group_inverse(b1) * b2;
  return {annulus_grade(q)};
}

CityMetricValue pseudo_distance(const Chamber& x, const Chamber& y) {
  return pseudo_distance(x.rep, y.rep);
}

AffinePermutation cross_codistance(const Chamber& x, const Chamber& y) {
  return codelta(x, y);
}

std::string CityMetricValue::d_str() const {
  if (!nu) return "0";
  if (*nu == 0) return "1";
  return "e^-" + std::to_string(*nu);
}

double CityMetricValue::d_approx() const {
  if (!nu) return 0.0;
  return std::exp(-static_cast<double>(*nu));
}

}  // namespace twincity
