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

#include "cutgen/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace cutgen {

namespace {

using nlohmann::json;

json rat(const Rational& r) { return r.to_string(); }

Rational parse_rat(const json& j, const char* what) {
  if (!j.is_string()) {
    throw std::invalid_argument(std::string("function JSON: ") + what +
                                " must be a rational string");
  }
  return Rational::parse(j.get<std::string>());
}

json interval_to_json(const IntervalOrPoint& e) {
  return json::array({rat(e.lo), rat(e.hi)});
}

const char* side_name(Side side) {
  switch (side) {
    case Side::kRight: return "right";
    case Side::kLeft: return "left";
    default: return "value";
  }
}

}  // namespace

json function_to_json(const PiecewiseFunction& fn) {
  json j;
  json breakpoints = json::array();
  for (const Rational& b : fn.end_points()) breakpoints.push_back(rat(b));
  j["breakpoints"] = std::move(breakpoints);
  if (fn.is_continuous()) {
    json values = json::array();
    for (const Rational& v : fn.values_at_end_points()) values.push_back(rat(v));
    j["values"] = std::move(values);
  } else {
    json limits = json::array();
    for (const LimitTriple& t : fn.limits_at_end_points()) {
      limits.push_back(json::array({rat(t.value), rat(t.right), rat(t.left)}));
    }
    j["limits"] = std::move(limits);
  }
  if (fn.declared_f()) j["f"] = rat(*fn.declared_f());
  return j;
}

PiecewiseFunction function_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("function JSON: expected an object");
  if (!j.contains("breakpoints") || !j["breakpoints"].is_array()) {
    throw std::invalid_argument("function JSON: missing 'breakpoints' array");
  }
  std::vector<Rational> breakpoints;
  for (const json& b : j["breakpoints"]) breakpoints.push_back(parse_rat(b, "breakpoint"));

  std::optional<Rational> f;
  if (j.contains("f")) f = parse_rat(j["f"], "f");

  if (j.contains("limits")) {
    if (!j["limits"].is_array()) {
      throw std::invalid_argument("function JSON: 'limits' must be an array");
    }
    std::vector<LimitTriple> limits;
    for (const json& t : j["limits"]) {
      if (!t.is_array() || t.size() != 3) {
        throw std::invalid_argument(
            "function JSON: each limit entry must be [value, right, left]");
      }
      limits.push_back(LimitTriple{parse_rat(t[0], "limit value"),
                                   parse_rat(t[1], "right limit"),
                                   parse_rat(t[2], "left limit")});
    }
    return PiecewiseFunction::from_breakpoints_and_limits(breakpoints, limits, f);
  }
  if (j.contains("values")) {
    if (!j["values"].is_array()) {
      throw std::invalid_argument("function JSON: 'values' must be an array");
    }
    std::vector<Rational> values;
    for (const json& v : j["values"]) values.push_back(parse_rat(v, "value"));
    return PiecewiseFunction::from_breakpoints_and_values(breakpoints, values, f);
  }
  throw std::invalid_argument("function JSON: need 'values' or 'limits'");
}

PiecewiseFunction load_function_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open function file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return function_from_json(j);
}

std::string function_to_json_string(const PiecewiseFunction& fn) {
  return function_to_json(fn).dump(2) + "\n";
}

json face_to_json(const Face& face) {
  json j;
  j["I"] = interval_to_json(face.triple[kAxisX]);
  j["J"] = interval_to_json(face.triple[kAxisY]);
  j["K"] = interval_to_json(face.triple[kAxisSum]);
  json vertices = json::array();
  for (const Point& v : face.vertices) {
    vertices.push_back(json::array({rat(v.x), rat(v.y)}));
  }
  j["vertices"] = std::move(vertices);
  j["projections"] = {{"I", interval_to_json(face.projections[kAxisX])},
                      {"J", interval_to_json(face.projections[kAxisY])},
                      {"K", interval_to_json(face.projections[kAxisSum])}};
  j["dimension"] = face.dimension;
  return j;
}

json minimality_report_to_json(const MinimalityReport& report) {
  json j;
  j["is_minimal"] = report.is_minimal;
  j["f"] = rat(report.f_used);
  json violations = json::array();
  for (const RangeViolation& v : report.range_violations) {
    violations.push_back({{"kind", "range"},
                          {"x", rat(v.x)},
                          {"side", side_name(v.side)},
                          {"value", rat(v.value)}});
  }
  for (const VertexSign& v : report.subadditivity_violations) {
    violations.push_back({{"kind", "subadditivity"},
                          {"vertex", json::array({rat(v.vertex.x), rat(v.vertex.y)})},
                          {"face", face_to_json(v.face)},
                          {"slack", rat(v.slack)}});
  }
  for (const SymmetryViolation& v : report.symmetry_violations) {
    violations.push_back(
        {{"kind", "symmetry"},
         {"x", rat(v.x)},
         {"sides", json::array({side_name(v.side_x), side_name(v.side_y)})},
         {"residual", rat(v.residual)}});
  }
  j["violations"] = std::move(violations);
  return j;
}

json covered_components_to_json(const CoveredComponents& covered) {
  json components = json::array();
  for (const CoveredComponent& c : covered.components) {
    json intervals = json::array();
    for (const auto& [lo, hi] : c.intervals) {
      intervals.push_back(json::array({rat(lo), rat(hi)}));
    }
    components.push_back({{"intervals", std::move(intervals)},
                          {"covered", c.covered},
                          {"directly_covered", c.directly_covered}});
  }
  return json{{"components", std::move(components)}};
}

json extremality_report_to_json(const ExtremalityReport& report) {
  json j;
  j["is_extreme"] = report.is_extreme;
  j["grid_denominator"] = report.grid_denominator;
  j["perturbation_space_dimension"] = report.perturbation_space_dimension;
  j["experimental"] = report.experimental;
  if (report.perturbation) {
    json cert;
    cert["perturbation"] = function_to_json(*report.perturbation);
    cert["epsilon"] = report.epsilon ? json(rat(*report.epsilon)) : json(nullptr);
    j["certificate"] = std::move(cert);
  } else {
    j["certificate"] = nullptr;
  }
  j["covered"] = covered_components_to_json(report.covered);
  return j;
}

json additive_faces_to_json(const AdditiveFaceSet& faces) {
  json out = json::array();
  for (const AdditiveFace& af : faces.faces) {
    json f = face_to_json(af.face);
    f["limit_witness"] = af.limit_witness ? face_to_json(*af.limit_witness) : json(nullptr);
    out.push_back(std::move(f));
  }
  return json{{"faces", std::move(out)}};
}

}  // namespace cutgen
