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

#include "twincity/cli.hpp"

#include <iostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "twincity/json_io.hpp"

namespace twincity {

namespace {

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json with_schema() {
  json o = json::object();
  o["schema"] = 1;
  return o;
}

Chamber chamber_from_file(const std::string& path) {
  return parse_chamber(load_json_file(path));
}

int run_decompose(const std::string& sign, const std::string& matrix_path) {
  const LoopMatrix g = parse_matrix(load_json_file(matrix_path));
  json out = with_schema();
  if (sign == "birkhoff") {
    const ExactBirkhoffDecomposition d = exact_birkhoff(g);
    out["label"] = permutation_to_json(d.label);
    out["left_witness"] = matrix_to_json(d.left).at("matrix");
    out["right_witness"] = matrix_to_json(d.right).at("matrix");
    out["precision_used"] = 0;  // exact witnesses
  } else {
    const bool plus = sign == "+";
    const Place direction = plus ? Place::at_zero : Place::at_infinity;
    const BruhatDecomposition d = rational_bruhat(g, plus);
    out["label"] = permutation_to_json(d.label());
    out["left_witness"] = series_matrix_to_json(d.elim.left, direction);
    out["right_witness"] = series_matrix_to_json(d.elim.right, direction);
    out["precision_used"] = d.precision;
  }
  emit(out);
  return 0;
}

/// F_p ball around the standard chamber: label-grouped counts, or a DOT
/// rendering of the panel-adjacency graph when requested.
template <unsigned P>
int run_ball(int n, int radius, bool plus, const std::string& field, bool dot) {
  const auto chambers = ball<P>(n, radius, plus);
  if (dot) {
    std::cout << "graph ball {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < chambers.size(); ++i)
      std::cout << "  c" << i << " [label=\"" << chambers[i].first.str() << "\"];\n";
    for (std::size_t i = 0; i < chambers.size(); ++i)
      for (std::size_t j = i + 1; j < chambers.size(); ++j) {
        const DistanceValue d = delta(chambers[i].second, chambers[j].second);
        if (!d.is_finite() || d.w->length() != 1) continue;
        std::cout << "  c" << i << " -- c" << j << " [label=\"s"
                  << d.w->reduced_word().front() << "\"];\n";
      }
    std::cout << "}\n";
    return 0;
  }
  json counts = json::array();
  for (const auto& [label, chamber] : chambers) {
    bool found = false;
    for (json& item : counts)
      if (item.at("label") == permutation_to_json(label)) {
        item["count"] = item.at("count").get<std::int64_t>() + 1;
        found = true;
      }
    if (!found) {
      json item = json::object();
      item["label"] = permutation_to_json(label);
      item["count"] = 1;
      counts.push_back(std::move(item));
    }
  }
  json out = with_schema();
  out["n"] = n;
  out["field"] = field;
  out["sign"] = plus ? "+" : "-";
  out["radius"] = radius;
  out["total"] = chambers.size();
  out["counts"] = std::move(counts);
  emit(out);
  return 0;
}

int dispatch(const CLI::App& app) {
  if (const CLI::App* c = app.get_subcommand_no_throw("decompose"); c && c->parsed())
    return run_decompose(c->get_option("--sign")->as<std::string>(),
                         c->get_option("--matrix")->as<std::string>());

  if (const CLI::App* c = app.get_subcommand_no_throw("dist"); c && c->parsed()) {
    const Chamber a = chamber_from_file(c->get_option("--a")->as<std::string>());
    const Chamber b = chamber_from_file(c->get_option("--b")->as<std::string>());
    json out = with_schema();
    out["distance"] = distance_to_json(delta(a, b));
    emit(out);
    return 0;
  }

  if (const CLI::App* c = app.get_subcommand_no_throw("codist"); c && c->parsed()) {
    const Chamber a = chamber_from_file(c->get_option("--a")->as<std::string>());
    const Chamber b = chamber_from_file(c->get_option("--b")->as<std::string>());
    json out = with_schema();
    out["codistance"] = permutation_to_json(codelta(a, b));
    emit(out);
    return 0;
  }

  if (const CLI::App* c = app.get_subcommand_no_throw("opposite"); c && c->parsed()) {
    const Chamber a = chamber_from_file(c->get_option("--a")->as<std::string>());
    const Chamber b = chamber_from_file(c->get_option("--b")->as<std::string>());
    json out = with_schema();
    out["opposite"] = is_opposite(a, b);
    emit(out);
    return 0;
  }

  if (const CLI::App* c = app.get_subcommand_no_throw("gallery"); c && c->parsed()) {
    const Chamber a = chamber_from_file(c->get_option("--a")->as<std::string>());
    const Chamber b = chamber_from_file(c->get_option("--b")->as<std::string>());
    const std::vector<Chamber> path = gallery(a, b);
    json list = json::array();
    for (const Chamber& step : path) list.push_back(chamber_to_json(step));
    json out = with_schema();
    out["length"] = path.size() - 1;
    out["gallery"] = std::move(list);
    emit(out);
    return 0;
  }

  if (const CLI::App* c = app.get_subcommand_no_throw("ball"); c && c->parsed()) {
    const int n = c->get_option("--n")->as<int>();
    const int radius = c->get_option("--radius")->as<int>();
    const std::string field = c->get_option("--field")->as<std::string>();
    const bool plus = c->get_option("--sign")->as<std::string>() == "+";
    const bool dot = c->get_option("--dot")->as<bool>();
    if (field == "F3") return run_ball<3>(n, radius, plus, field, dot);
    return run_ball<2>(n, radius, plus, field, dot);
  }

  if (const CLI::App* c = app.get_subcommand_no_throw("component"); c && c->parsed()) {
    const std::vector<Chamber> registry =
        parse_registry(load_json_file(c->get_option("--registry")->as<std::string>()));
    const Chamber x = chamber_from_file(c->get_option("--matrix")->as<std::string>());
    json out = with_schema();
    out["component"] = component_of(x, registry);
    emit(out);
    return 0;
  }

  if (const CLI::App* c = app.get_subcommand_no_throw("citydist"); c && c->parsed()) {
    const Chamber a = chamber_from_file(c->get_option("--a")->as<std::string>());
    const Chamber b = chamber_from_file(c->get_option("--b")->as<std::string>());
    const bool approx = c->get_option("--approx")->as<bool>();
    json out = with_schema();
    const json metric = city_metric_to_json(pseudo_distance(a, b), approx);
    for (const auto& [key, value] : metric.items()) out[key] = value;
    emit(out);
    return 0;
  }

  if (const CLI::App* inf = app.get_subcommand_no_throw("infinity"); inf && inf->parsed()) {
    const CLI::App* c = inf->get_subcommand_no_throw("relpos");
    const Flag a = parse_flag(load_json_file(c->get_option("--a")->as<std::string>()));
    const Flag b = parse_flag(load_json_file(c->get_option("--b")->as<std::string>()));
    json out = with_schema();
    out["relative_position"] = permutation_to_json(relative_position(a, b));
    emit(out);
    return 0;
  }

  if (const CLI::App* c = app.get_subcommand_no_throw("check"); c && c->parsed()) {
    GeneratorConfig cfg;
    cfg.seed = c->get_option("--seed")->as<std::uint64_t>();
    cfg.samples = c->get_option("--samples")->as<int>();
    cfg.field = c->get_option("--field")->as<std::string>();
    const SuiteReport report = run_suite(c->get_option("--suite")->as<std::string>(), cfg);
    emit(report_to_json(report));
    return report.ok() ? 0 : 1;
  }

  if (const CLI::App* c = app.get_subcommand_no_throw("flip"); c && c->parsed()) {
    const Chamber a = chamber_from_file(c->get_option("--chamber")->as<std::string>());
    json out = with_schema();
    out["chamber"] = chamber_to_json(bn_flip(a));
    emit(out);
    return 0;
  }

  return 2;  // unreachable: require_subcommand guarantees one parsed verb
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"twincity: exact Weyl distances, codistances, components and boundaries\n"
               "for the affine twin cities of SL_n over function rings"};
  app.require_subcommand(1);

  CLI::App* dec = app.add_subcommand("decompose", "Iwahori or Birkhoff decomposition");
  dec->add_option("--sign", "decomposition kind: +, - or birkhoff")
      ->required()
      ->check(CLI::IsMember({"+", "-", "birkhoff"}));
  dec->add_option("--matrix", "matrix JSON file")->required();

  auto two_chambers = [](CLI::App* c) {
    c->add_option("--a", "first chamber JSON file")->required();
    c->add_option("--b", "second chamber JSON file")->required();
  };
  two_chambers(app.add_subcommand("dist", "Weyl distance of two equal-sign chambers"));
  two_chambers(app.add_subcommand("codist", "Weyl codistance of two opposite-sign chambers"));
  two_chambers(app.add_subcommand("opposite", "test whether two chambers are opposite"));
  two_chambers(app.add_subcommand("gallery", "minimal gallery between equal-sign chambers"));

  CLI::App* bl = app.add_subcommand("ball", "chamber ball around the standard chamber");
  bl->add_option("--radius", "maximal Weyl length")->required()->check(CLI::NonNegativeNumber);
  bl->add_option("--n", "matrix size")->default_val(2)->check(CLI::Range(2, 4));
  bl->add_option("--field", "coefficient field")
      ->default_val("F2")
      ->check(CLI::IsMember({"F2", "F3"}));
  bl->add_option("--sign", "building half")->default_val("+")->check(CLI::IsMember({"+", "-"}));
  bl->add_flag("--dot", "emit the panel-adjacency graph as DOT");

  CLI::App* comp = app.add_subcommand("component", "locate a chamber in a component registry");
  comp->add_option("--registry", "registry JSON file")->required();
  comp->add_option("--matrix", "chamber or matrix JSON file")->required();

  CLI::App* city = app.add_subcommand("citydist", "pseudo-distance between components");
  city->add_option("--a", "first base JSON file")->required();
  city->add_option("--b", "second base JSON file")->required();
  city->add_flag("--approx", "add the advisory floating d_approx field");

  CLI::App* inf = app.add_subcommand("infinity", "boundary-at-infinity queries");
  inf->require_subcommand(1);
  CLI::App* rel = inf->add_subcommand("relpos", "relative position of two flags");
  rel->add_option("--a", "first flag JSON file")->required();
  rel->add_option("--b", "second flag JSON file")->required();

  CLI::App* chk = app.add_subcommand("check", "run a property-test suite");
  std::vector<std::string> suites = suite_names();
  chk->add_option("--suite", "suite name")
      ->required()
      ->check(CLI::IsMember(std::set<std::string>(suites.begin(), suites.end())));
  chk->add_option("--samples", "number of samples")->default_val(100)->check(CLI::PositiveNumber);
  chk->add_option("--seed", "master seed")->default_val(std::uint64_t{20260814});
  chk->add_option("--field", "sample field for the field-split suites")
      ->default_val("Q")
      ->check(CLI::IsMember({"Q", "F2", "F3"}));

  CLI::App* flp = app.add_subcommand("flip", "apply the sign-exchanging involution");
  flp->add_option("--chamber", "chamber JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return dispatch(app);
  } catch (const kernel_error& e) {
    json out = with_schema();
    out["error"] = errc_name(e.code());
    out["detail"] = e.detail();
    emit(out);
    return 1;
  } catch (const std::exception& e) {
    json out = with_schema();
    out["error"] = errc_name(errc::internal_error);
    out["detail"] = e.what();
    emit(out);
    return 1;
  }
}

}  // namespace twincity
