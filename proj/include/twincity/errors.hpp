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

#include <stdexcept>
#include <string>

namespace twincity {

/// Machine-readable failure codes.  Every throwing path in the kernel uses
/// one of these so that callers (and the CLI) can map failures onto stable
/// JSON error identifiers.
enum class errc {
  zero_input,
  pole_on_circle,
  non_split_denominator,
  determinant_not_one,
  rank_mismatch,
  sign_mismatch,
  insufficient_precision,
  non_terminating,
  wrong_regularity,
  different_components,
  not_opposite,
  not_found,
  degenerate_flag,
  empty_pool,
  parse_error,
  internal_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::zero_input: return "ZeroInput";
    case errc::pole_on_circle: return "PoleOnCircle";
    case errc::non_split_denominator: return "NonSplitDenominator";
    case errc::determinant_not_one: return "DeterminantNotOne";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::sign_mismatch: return "SignMismatch";
    case errc::insufficient_precision: return "InsufficientPrecision";
    case errc::non_terminating: return "NonTerminating";
    case errc::wrong_regularity: return "WrongRegularity";
    case errc::different_components: return "DifferentComponents";
    case errc::not_opposite: return "NotOpposite";
    case errc::not_found: return "NotFound";
    case errc::degenerate_flag: return "DegenerateFlag";
    case errc::empty_pool: return "EmptyPool";
    case errc::parse_error: return "ParseError";
    case errc::internal_error: return "InternalError";
  }
  return "InternalError";
}

/// Exception carrying a twincity error code plus a human-oriented detail
/// message.  `insufficient_precision` additionally has its own subclass so
/// adaptive-precision drivers can catch exactly that case and retry.
class kernel_error : public std::runtime_error {
 public:
  kernel_error(errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  errc code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  errc code_;
  std::string detail_;
};

class insufficient_precision : public kernel_error {
 public:
  explicit insufficient_precision(const std::string& detail)
      : kernel_error(errc::insufficient_precision, detail) {}
};

[[noreturn]] inline void fail(errc code, const std::string& detail) {
  if (code == errc::insufficient_precision) throw insufficient_precision(detail);
  throw kernel_error(code, detail);
}

inline void require(bool ok, errc code, const std::string& detail) {
  if (!ok) fail(code, detail);
}

}  // namespace twincity
