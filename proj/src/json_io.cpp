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

#include "twincity/json_io.hpp"

#include <climits>
#include <fstream>
#include <regex>
#include <string>
#include <utility>
#include <vector>

namespace twincity {

namespace {

mpq_class parse_rational_string(const std::string& s) {
  static const std::regex form(R"([+-]?[0-9]+(/[0-9]+)?)");
  require(std::regex_match(s, form), errc::parse_error,
          "malformed rational literal \"" + s + "\"");
  mpq_class q(s.front() == '+' ? s.substr(1) : s);
  require(q.get_den() != 0, errc::parse_error, "zero denominator in \"" + s + "\"");
  q.canonicalize();
  return q;
}

mpq_class parse_rational(const json& j) {
  if (j.is_number_integer()) return mpq_class(mpz_class(j.dump()));
  if (j.is_string()) return parse_rational_string(j.get<std::string>());
  if (j.is_number_float())
    fail(errc::parse_error, "floating-point numbers are not accepted; write rationals as strings");
  fail(errc::parse_error, "expected an integer or a rational string");
}

json rational_to_json(const mpq_class& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p())
    return json(static_cast<std::int64_t>(q.get_num().get_si()));
  return json(q.get_str());
}

int parse_int(const json& j, const char* what) {
  require(j.is_number_integer(), errc::parse_error, std::string("expected an integer ") + what);
  long long v = j.get<long long>();
  require(v >= INT_MIN && v <= INT_MAX, errc::parse_error,
          std::string(what) + " out of range");
  return static_cast<int>(v);
}

}  // namespace

GaussQ parse_scalar(const json& j) {
  if (j.is_object()) {
    require(j.contains("re") || j.contains("im"), errc::parse_error,
            "scalar object must have \"re\" and/or \"im\"");
    mpq_class re = j.contains("re") ? parse_rational(j.at("re")) : mpq_class(0);
    mpq_class im = j.contains("im") ? parse_rational(j.at("im")) : mpq_class(0);
    return GaussQ(re, im);
  }
  return GaussQ(parse_rational(j), mpq_class(0));
}

json scalar_to_json(const GaussQ& a) {
  if (a.is_real()) return rational_to_json(a.re);
  json o = json::object();
  o["re"] = rational_to_json(a.re);
  o["im"] = rational_to_json(a.im);
  return o;
}

LaurentPoly<GaussQ> parse_laurent(const json& j) {
  require(j.is_array(), errc::parse_error,
          "expected a Laurent polynomial as a list of [exponent, scalar] pairs");
  LaurentPoly<GaussQ> p;
  for (const json& term : j) {
    require(term.is_array() && term.size() == 2, errc::parse_error,
            "each Laurent term must be an [exponent, scalar] pair");
    p.add_term(parse_int(term.at(0), "exponent"), parse_scalar(term.at(1)));
  }
  return p;
}

json laurent_to_json(const LaurentPoly<GaussQ>& p) {
  json a = json::array();
  for (const auto& [e, coeff] : p.c) a.push_back(json::array({json(e), scalar_to_json(coeff)}));
  return a;
}

namespace {

/// Numerators inside {"num": ...} may be a bare scalar or a Laurent list.
LaurentPoly<GaussQ> parse_poly_like(const json& j) {
  if (j.is_array()) return parse_laurent(j);
  return LaurentPoly<GaussQ>::constant(parse_scalar(j));
}

}  // namespace

RationalFunction parse_entry(const json& j) {
  if (j.is_array()) return RationalFunction::from_laurent(parse_laurent(j));
  if (j.is_object() && j.contains("num")) {
    LaurentPoly<GaussQ> num = parse_poly_like(j.at("num"));
    if (!j.contains("den")) return RationalFunction::from_laurent(num);
    const json& den = j.at("den");
    if (den.is_array()) {
      std::map<GaussQ, int> roots;
      for (const json& factor : den) {
        require(factor.is_array() && factor.size() == 2, errc::parse_error,
                "each denominator factor must be a [root, order] pair");
        roots[parse_scalar(factor.at(0))] += parse_int(factor.at(1), "factor order");
      }
      return RationalFunction::make(num, roots);
    }
    if (den.is_object() && den.contains("coeffs"))
      return make_quotient(num, parse_laurent(den.at("coeffs")));
    fail(errc::parse_error,
         "\"den\" must be a factor list [[root, order], ...] or {\"coeffs\": [[exponent, "
         "scalar], ...]}");
  }
  return RationalFunction::constant(parse_scalar(j));
}

json entry_to_json(const RationalFunction& f) {
  if (f.den.empty()) return laurent_to_json(f.num);
  json factors = json::array();
  for (const auto& [root, order] : f.den)
    factors.push_back(json::array({scalar_to_json(root), json(order)}));
  json o = json::object();
  o["num"] = laurent_to_json(f.num);
  o["den"] = factors;
  return o;
}

namespace {

const json& unwrap(const json& j, const char* key) {
  if (j.is_object() && j.contains(key)) return j.at(key);
  return j;
}

/// Shared row-list parser; `where` labels error messages.
LoopMatrix parse_rows(const json& rows, const std::string& where) {
  require(rows.is_array() && rows.size() >= 2, errc::parse_error,
          where + " must be a list of at least 2 rows");
  const int n = static_cast<int>(rows.size());
  LoopMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const json& row = rows.at(i);
    require(row.is_array() && static_cast<int>(row.size()) == n, errc::parse_error,
            where + " row " + std::to_string(i + 1) + " must have exactly " +
                std::to_string(n) + " entries");
    for (int k = 0; k < n; ++k) {
      try {
        m.at(i, k) = parse_entry(row.at(k));
      } catch (const kernel_error& e) {
        fail(e.code(), "entry (" + std::to_string(i + 1) + "," + std::to_string(k + 1) +
                           "): " + e.detail());
      }
    }
  }
  return m;
}

}  // namespace

LoopMatrix parse_matrix(const json& j) {
  LoopMatrix m = parse_rows(unwrap(j, "matrix"), "a matrix");
  for (int i = 0; i < m.n; ++i)
    for (int k = 0; k < m.n; ++k)
      for (const auto& [root, order] : m.at(i, k).den)
        require(!(root.norm2() == mpq_class(1)), errc::pole_on_circle,
                "entry (" + std::to_string(i + 1) + "," + std::to_string(k + 1) +
                    "): pole of modulus one at t = " + root.str());
  validate_loop_matrix(m);
  return m;
}

json matrix_to_json(const LoopMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.n; ++i) {
    json row = json::array();
    for (int k = 0; k < m.n; ++k) row.push_back(entry_to_json(m.at(i, k)));
    rows.push_back(std::move(row));
  }
  json o = json::object();
  o["schema"] = 1;
  o["matrix"] = std::move(rows);
  return o;
}

Chamber parse_chamber(const json& j) {
  if (j.is_object() && j.contains("sign")) {
    require(j.contains("matrix"), errc::parse_error, "chamber object must carry \"matrix\"");
    require(j.at("sign").is_string(), errc::parse_error, "chamber sign must be a string");
    const std::string sign = j.at("sign").get<std::string>();
    require(sign == "+" || sign == "-", errc::parse_error,
            "chamber sign must be \"+\" or \"-\"");
    return {sign == "+", parse_matrix(j.at("matrix"))};
  }
  return {true, parse_matrix(j)};
}

json chamber_to_json(const Chamber& c) {
  json o = json::object();
  o["sign"] = c.plus ? "+" : "-";
  o["matrix"] = matrix_to_json(c.rep).at("matrix");
  return o;
}

std::vector<Chamber> parse_registry(const json& j) {
  const json& list = unwrap(j, "components");
  require(list.is_array(), errc::parse_error, "a registry must be a list of chambers");
  std::vector<Chamber> out;
  out.reserve(list.size());
  for (const json& item : list) out.push_back(parse_chamber(item));
  return out;
}

Flag parse_flag(const json& j) {
  return make_flag(parse_rows(unwrap(j, "rows"), "a flag"));
}

AffinePermutation parse_permutation(const json& j) {
  require(j.is_object() && j.contains("n") && j.contains("window"), errc::parse_error,
          "a Weyl element must be {\"n\": ..., \"window\": [...]}");
  const int n = parse_int(j.at("n"), "rank");
  const json& win = j.at("window");
  require(win.is_array() && static_cast<int>(win.size()) == n, errc::parse_error,
          "window length must equal n");
  std::vector<std::int64_t> window;
  window.reserve(win.size());
  for (const json& v : win) {
    require(v.is_number_integer(), errc::parse_error, "window entries must be integers");
    window.push_back(v.get<std::int64_t>());
  }
  return AffinePermutation::make(n, window);
}

json permutation_to_json(const AffinePermutation& w) {
  json o = json::object();
  o["n"] = w.n;
  o["window"] = w.window;
  return o;
}

json series_to_json(const Series<GaussQ>& s, Place direction) {
  json coeffs = json::array();
  for (const GaussQ& a : s.c) coeffs.push_back(scalar_to_json(a));
  json o = json::object();
  o["base_exponent"] = s.lo;
  o["coefficients"] = std::move(coeffs);
  o["direction"] = place_name(direction);
  return o;
}

json series_matrix_to_json(const Mat<Series<GaussQ>>& m, Place direction) {
  json rows = json::array();
  for (int i = 0; i < m.n; ++i) {
    json row = json::array();
    for (int k = 0; k < m.n; ++k) row.push_back(series_to_json(m.at(i, k), direction));
    rows.push_back(std::move(row));
  }
  return rows;
}

json laurent_matrix_to_json(const LaurentMat<GaussQ>& m) {
  json rows = json::array();
  for (int i = 0; i < m.n; ++i) {
    json row = json::array();
    for (int k = 0; k < m.n; ++k) row.push_back(laurent_to_json(m.at(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json distance_to_json(const DistanceValue& d) {
  if (!d.is_finite()) return json("infinite");
  json o = json::object();
  o["finite"] = d.w->window;
  return o;
}

json city_metric_to_json(const CityMetricValue& v, bool with_approx) {
  json o = json::object();
  if (v.nu)
    o["nu"] = *v.nu;
  else
    o["nu"] = "inf";
  o["d"] = v.d_str();
  if (with_approx) o["d_approx"] = v.d_approx();
  return o;
}

json report_to_json(const SuiteReport& r) {
  json violations = json::array();
  for (const Violation& v : r.violations) {
    json item = json::object();
    item["seed"] = v.seed;
    item["check"] = v.check;
    item["detail"] = v.detail;
    violations.push_back(std::move(item));
  }
  json o = json::object();
  o["schema"] = 1;
  o["suite"] = r.suite;
  o["field"] = r.field;
  o["samples"] = r.samples;
  o["violations"] = std::move(violations);
  o["ok"] = r.ok();
  return o;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::parse_error, "cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, path + ": " + e.what());
  }
}

}  // namespace twincity
