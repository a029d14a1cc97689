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

#ifndef CUTGEN_JSON_IO_HPP_
#define CUTGEN_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "cutgen/analysis.hpp"
#include "cutgen/complex.hpp"
#include "cutgen/piecewise.hpp"

namespace cutgen {

// Function format: {"breakpoints": ["0", "4/5", "1"], "limits": [[value,
// right, left], ...]} with rational strings, or the continuous shorthand
// "values"; optional "f".  All numbers are rational strings, never floats.
nlohmann::json function_to_json(const PiecewiseFunction& fn);
PiecewiseFunction function_from_json(const nlohmann::json& j);

PiecewiseFunction load_function_json(const std::string& path);
std::string function_to_json_string(const PiecewiseFunction& fn);

// {"I": [lo, hi], "J": ..., "K": ..., "vertices": [[x, y], ...],
//  "projections": {"I": ..., "J": ..., "K": ...}, "dimension": d}
nlohmann::json face_to_json(const Face& face);

nlohmann::json minimality_report_to_json(const MinimalityReport& report);
nlohmann::json covered_components_to_json(const CoveredComponents& covered);
nlohmann::json extremality_report_to_json(const ExtremalityReport& report);
nlohmann::json additive_faces_to_json(const AdditiveFaceSet& faces);

}  // namespace cutgen

#endif  // CUTGEN_JSON_IO_HPP_
