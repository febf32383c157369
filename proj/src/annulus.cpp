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

#include "twincity/matrix.hpp"

#include <gmpxx.h>

namespace twincity {

namespace {

/// Decide e^x < y for an integer x >= 1 and rational y > 1 by squeezing
/// e^x between partial Taylor sums with an explicit geometric tail bound.
/// Since e^x is irrational, refinement always separates the two sides.
bool exp_below(unsigned x, const mpq_class& y) {
  mpq_class qx(x);
  for (unsigned terms = 4 * x + 16, round = 0; round < 64; terms *= 2, ++round) {
    mpq_class sum = 1, term = 1;
    for (unsigned k = 1; k <= terms; ++k) {
      term *= qx;
      term /= k;
      sum += term;
    }
    // Tail after `terms` terms: next term * geometric ratio bound, valid
    // once x / (terms + 2) < 1 (always true for our starting size).
    mpq_class next = term * qx / (terms + 1);
    mpq_class ratio = qx / (terms + 2);
    mpq_class tail = next / (1 - ratio);
    if (sum + tail < y) return true;   // upper bound already below y
    if (sum > y) return false;         // lower bound already above y
  }
  fail(errc::internal_error, "interval refinement for exp did not separate");
}

}  // namespace

bool e_power_below_modulus(unsigned m, const mpq_class& norm2) {
  require(norm2 > 1, errc::internal_error, "modulus comparison expects |c|^2 > 1");
  if (m == 0) return true;  // e^0 = 1 < |c|
  return exp_below(2 * m, norm2);  // e^m < sqrt(q)  <=>  e^{2m} < q
}

std::optional<unsigned> annulus_grade(const LoopMatrix& m) {
  std::optional<unsigned> grade;
  for (const auto& entry : m.a)
    for (const auto& [root, order] : entry.den) {
      mpq_class q = root.norm2();
      require(!(q == 1), errc::pole_on_circle, "pole of modulus one");
      if (q < 1) q = 1 / q;
      unsigned g = 0;
      while (e_power_below_modulus(g + 1, q)) ++g;
      if (!grade || g < *grade) grade = g;
    }
  return grade;
}

}  // namespace twincity
