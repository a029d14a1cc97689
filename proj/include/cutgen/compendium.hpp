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

#ifndef CUTGEN_COMPENDIUM_HPP_
#define CUTGEN_COMPENDIUM_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cutgen/piecewise.hpp"

namespace cutgen {

// Two-slope function with breakpoints [0, f, 1] and values [0, 1, 0];
// minimal and extreme for every f in (0, 1).
PiecewiseFunction gmic(const Rational& f = Rational(4, 5));

// Continuous function with breakpoints [0, 1/5, 3/5, 4/5, 1] and values
// [0, 1/5, 4/5, 1, 0]: symmetric for f = 4/5 but not subadditive.
PiecewiseFunction not_minimal_2();

// Discontinuous demo: constant 1/2 on (0, 1/2) and (1/2, 1), with
// pi(0) = 0 and pi(1/2) = 1; minimal, two-sided discontinuous at both
// breakpoints, f = 1/2.
PiecewiseFunction two_sided_discont_demo();

// Minimal but not extreme: the midpoint of gmic(4/5) and the three-slope
// minimal function with values 1/2 at 1/5, 2/5, 3/5.  Breakpoints
// [0, 1/5, 2/5, 3/5, 4/5, 1], values [0, 3/8, 1/2, 5/8, 1, 0], f = 4/5.
PiecewiseFunction demo_not_extreme();

// Random piecewise linear function with breakpoints on (1/xgrid)Z and
// values/limits on (1/ygrid)Z, each breakpoint independently continuous
// with probability continuous_proba.  With `symmetry`, an f with
// pi(f) = 1 is chosen on the grid and the data is completed so that the
// symmetry condition holds, including the one-sided limit equations.
//
// Generation is deterministic per seed (scheme v1: std::mt19937_64 with
// draws reduced modulo the range).  Throws when the constraints are
// infeasible after the retry budget (for example ygrid too coarse to
// place the forced value 1/2 at a fixed point of x -> f - x).
PiecewiseFunction random_piecewise_function(long xgrid, long ygrid,
                                            const Rational& continuous_proba,
                                            bool symmetry, std::uint64_t seed);

struct ExpectedProperties {
  std::optional<bool> minimal;
  std::optional<bool> extreme;
  std::optional<bool> continuous;
};

struct CompendiumEntry {
  std::string name;
  std::string description;
  // Parameter name -> default value as text; rational grammar except for
  // the file loader's "path".
  std::map<std::string, std::string> default_parameters;
  ExpectedProperties expected;
  std::function<PiecewiseFunction(const std::map<std::string, std::string>&)> construct;
};

const std::vector<CompendiumEntry>& compendium_entries();
const CompendiumEntry* find_compendium_entry(std::string_view name);

}  // namespace cutgen

#endif  // CUTGEN_COMPENDIUM_HPP_
