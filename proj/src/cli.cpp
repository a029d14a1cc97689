// Copyright 2026 The cutgen authors
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

#include "cutgen/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "cutgen/analysis.hpp"
#include "cutgen/compendium.hpp"
#include "cutgen/json_io.hpp"
#include "cutgen/render.hpp"

namespace cutgen {

namespace {

using nlohmann::json;

std::string dumped(const json& j) { return j.dump(2) + "\n"; }

// --param k=v pairs.
std::map<std::string, std::string> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, std::string> params;
  for (const std::string& p : raw) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("--param expects name=value, got '" + p + "'");
    }
    params[p.substr(0, eq)] = p.substr(eq + 1);
  }
  return params;
}

struct PlotOptions {
  std::string file;
  std::string diagram = "function";
  std::string out_path;
  bool colored_slopes = false;
};

}  // namespace

CommandResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact analysis of Z-periodic piecewise linear functions"};
  app.name("cutgen");
  app.require_subcommand(1);

  std::string file;
  std::string at;
  bool want_limits = false;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a function at a point");
  eval->add_option("file", file, "function JSON file")->required();
  eval->add_option("--at", at, "evaluation point, rational")->required();
  eval->add_flag("--limits", want_limits, "also report one-sided limits");

  std::string f_override;
  CLI::App* minimality = app.add_subcommand("minimality", "minimality test report");
  minimality->add_option("file", file, "function JSON file")->required();
  minimality->add_option("--f", f_override, "symmetry point, rational");

  long refinement = 4;
  CLI::App* extremality =
      app.add_subcommand("extremality", "grid extremality test report");
  extremality->add_option("file", file, "function JSON file")->required();
  extremality->add_option("--refinement", refinement, "grid refinement factor");

  CLI::App* additive =
      app.add_subcommand("additive-faces", "inclusion-maximal additive faces");
  additive->add_option("file", file, "function JSON file")->required();

  CLI::App* covered = app.add_subcommand("covered", "covered interval components");
  covered->add_option("file", file, "function JSON file")->required();

  PlotOptions plot_opts;
  CLI::App* plot = app.add_subcommand("plot", "render an SVG diagram");
  plot->add_option("file", plot_opts.file, "function JSON file")->required();
  plot->add_option("--diagram", plot_opts.diagram, "function|cones|additive")
      ->check(CLI::IsMember({"function", "cones", "additive"}))
      ->required();
  plot->add_option("-o,--output", plot_opts.out_path, "output SVG path");
  plot->add_flag("--colored-slopes", plot_opts.colored_slopes,
                 "one color per distinct slope");

  CLI::App* compendium = app.add_subcommand("compendium", "named function library");
  compendium->require_subcommand(1);
  CLI::App* comp_list = compendium->add_subcommand("list", "list entries");
  std::string entry_name;
  std::vector<std::string> raw_params;
  CLI::App* comp_get = compendium->add_subcommand("get", "construct an entry");
  comp_get->add_option("name", entry_name, "entry name")->required();
  comp_get->add_option("--param", raw_params, "parameter name=value");

  long xgrid = 0, ygrid = 0;
  std::string proba = "1";
  bool symmetry = false;
  std::uint64_t seed = 0;
  CLI::App* random = app.add_subcommand("random", "random piecewise linear function");
  random->add_option("--xgrid", xgrid, "breakpoint grid denominator")->required();
  random->add_option("--ygrid", ygrid, "value grid denominator")->required();
  random->add_option("--continuous-proba", proba, "probability of continuity, rational");
  random->add_flag("--symmetry", symmetry, "complete to a symmetric function");
  random->add_option("--seed", seed, "random seed")->required();

  CommandResult result;
  std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 wants reversed
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    result.exit_code = app.exit(e, out, err);
    result.output = out.str();
    result.error = err.str();
    if (result.exit_code != 0) result.exit_code = 2;
    return result;
  }

  try {
    if (*eval) {
      const PiecewiseFunction fn = load_function_json(file);
      const Rational x = Rational::parse(at);
      if (want_limits) {
        const LimitTriple t = fn.limits_at(x);
        result.output = dumped(json{{"value", t.value.to_string()},
                                    {"right", t.right.to_string()},
                                    {"left", t.left.to_string()}});
      } else {
        result.output = dumped(json{{"value", fn(x).to_string()}});
      }
    } else if (*minimality) {
      const PiecewiseFunction fn = load_function_json(file);
      std::optional<Rational> f;
      if (!f_override.empty()) f = Rational::parse(f_override);
      result.output = dumped(minimality_report_to_json(minimality_test(fn, f)));
    } else if (*extremality) {
      const PiecewiseFunction fn = load_function_json(file);
      result.output = dumped(extremality_report_to_json(extremality_test(fn, refinement)));
    } else if (*additive) {
      const PiecewiseFunction fn = load_function_json(file);
      result.output = dumped(additive_faces_to_json(generate_maximal_additive_faces(fn)));
    } else if (*covered) {
      const PiecewiseFunction fn = load_function_json(file);
      result.output = dumped(covered_components_to_json(generate_covered_intervals(fn)));
    } else if (*plot) {
      const PiecewiseFunction fn = load_function_json(plot_opts.file);
      DiagramSpec spec;
      spec.colored_slopes = plot_opts.colored_slopes;
      std::string svg;
      if (plot_opts.diagram == "function") {
        spec.mode = DiagramMode::kFunction;
        svg = plot_function(fn, spec);
      } else if (plot_opts.diagram == "cones") {
        spec.mode = DiagramMode::kCones;
        svg = plot_2d_diagram_with_cones(fn, spec);
      } else {
        spec.mode = DiagramMode::kAdditive;
        svg = plot_2d_diagram(fn, spec);
      }
      if (plot_opts.out_path.empty()) {
        result.output = svg;
      } else {
        std::ofstream out(plot_opts.out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + plot_opts.out_path);
        out << svg;
        result.output = dumped(json{{"written", plot_opts.out_path}});
      }
    } else if (*comp_list) {
      json entries = json::array();
      for (const CompendiumEntry& entry : compendium_entries()) {
        json e{{"name", entry.name}, {"description", entry.description}};
        e["parameters"] = json(entry.default_parameters);
        json expected = json::object();
        if (entry.expected.minimal) expected["minimal"] = *entry.expected.minimal;
        if (entry.expected.extreme) expected["extreme"] = *entry.expected.extreme;
        if (entry.expected.continuous) expected["continuous"] = *entry.expected.continuous;
        e["expected"] = std::move(expected);
        entries.push_back(std::move(e));
      }
      result.output = dumped(json{{"entries", std::move(entries)}});
    } else if (*comp_get) {
      const CompendiumEntry* entry = find_compendium_entry(entry_name);
      if (entry == nullptr) {
        throw std::invalid_argument("unknown compendium entry '" + entry_name + "'");
      }
      std::map<std::string, std::string> params = entry->default_parameters;
      for (const auto& [k, v] : parse_params(raw_params)) {
        if (params.find(k) == params.end()) {
          throw std::invalid_argument("entry '" + entry_name + "' has no parameter '" +
                                      k + "'");
        }
        params[k] = v;
      }
      result.output = function_to_json_string(entry->construct(params));
    } else if (*random) {
      const PiecewiseFunction fn = random_piecewise_function(
          xgrid, ygrid, Rational::parse(proba), symmetry, seed);
      result.output = function_to_json_string(fn);
    }
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.output = dumped(json{{"error", e.what()}});
  }
  return result;
}

}  // namespace cutgen
