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

#ifndef CUTGEN_RENDER_HPP_
#define CUTGEN_RENDER_HPP_

#include <string>

#include "cutgen/piecewise.hpp"
#include "cutgen/rational.hpp"

namespace cutgen {

enum class DiagramMode { kFunction, kCones, kAdditive };

// All classification happens in exact arithmetic; coordinates are turned
// into decimals only at emission time, so identical inputs produce
// byte-identical documents.
struct DiagramSpec {
  DiagramMode mode = DiagramMode::kFunction;
  bool colored_slopes = false;
  int width = 560;
  int height = 560;
  int precision = 6;  // decimal places, round half to even
};

// Exact decimal rendering of a rational with the given number of places,
// round half to even.
std::string format_decimal(const Rational& v, int digits);

// The function graph over [0, 1] with filled dots at attained values and
// hollow dots at one-sided limits that differ.
std::string plot_function(const PiecewiseFunction& fn, const DiagramSpec& spec);

// The two-dimensional complex with the function along the top and left
// borders, grid lines, a colored dot per vertex (green: additivity, red:
// subadditivity violated), and, for discontinuous functions, colored
// cones for the limit values around each vertex.
std::string plot_2d_diagram_with_cones(const PiecewiseFunction& fn,
                                       const DiagramSpec& spec);

// The maximal additive faces (green) with their projections as gray
// shadows on the x-, y- and (x+y)-axes.  Requires a subadditive function.
std::string plot_2d_diagram(const PiecewiseFunction& fn, const DiagramSpec& spec);

}  // namespace cutgen

#endif  // CUTGEN_RENDER_HPP_
