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

#ifndef CUTGEN_ANALYSIS_HPP_
#define CUTGEN_ANALYSIS_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "cutgen/complex.hpp"
#include "cutgen/piecewise.hpp"
#include "cutgen/rational.hpp"

namespace cutgen {

// A value or one-sided limit outside [0, 1]; also records pi(0) != 0
// (the required pin at the origin) as a violation at x = 0.
struct RangeViolation {
  Rational x;
  Side side;
  Rational value;
};

// pi(x, side_x) + pi((f-x) mod 1, side_y) != 1.
struct SymmetryViolation {
  Rational x;
  Side side_x;
  Side side_y;
  Rational residual;  // lhs - 1
};

struct SubadditivityResult {
  bool subadditive;
  std::vector<VertexSign> violations;  // every strictly negative witness
};

// True iff delta_pi >= 0 at every vertex of the complex and every limit
// value of delta_pi from a face containing a vertex is >= 0.  For a
// continuous function the vertex values alone decide.
SubadditivityResult subadditivity_test(const PiecewiseFunction& fn);

struct SymmetryResult {
  bool symmetric;
  std::vector<SymmetryViolation> violations;
};

// Checks pi(x) + pi((f-x) mod 1) = 1 together with the one-sided limit
// equations at every breakpoint and every reflected breakpoint.
SymmetryResult symmetry_test(const PiecewiseFunction& fn, const Rational& f);

// The declared f if present, otherwise the smallest breakpoint with
// value 1.  Throws when no such breakpoint exists.
Rational find_f(const PiecewiseFunction& fn);

struct MinimalityReport {
  bool is_minimal = false;
  Rational f_used;
  std::vector<RangeViolation> range_violations;
  std::vector<VertexSign> subadditivity_violations;
  std::vector<SymmetryViolation> symmetry_violations;

  bool has_violations() const {
    return !range_violations.empty() || !subadditivity_violations.empty() ||
           !symmetry_violations.empty();
  }
};

// Fully automatic minimality test: pi(0) = 0, values and one-sided limits
// within [0, 1], subadditivity on the complex, and the symmetry condition
// for f (found via find_f when not supplied).
MinimalityReport minimality_test(const PiecewiseFunction& fn,
                                 std::optional<Rational> f = std::nullopt);

struct AdditiveFace {
  Face face;
  // Present when additivity holds only in the limit: the containing face
  // whose limit value vanishes on this face.
  std::optional<Face> limit_witness;
};

struct AdditiveFaceSet {
  std::vector<AdditiveFace> faces;  // inclusion-maximal, sorted by key
};

// Inclusion-maximal additive faces of the complex.  Requires a
// subadditive function.
AdditiveFaceSet generate_maximal_additive_faces(const PiecewiseFunction& fn);

struct CoveredComponent {
  // Open intervals (x_i, x_{i+1}) between consecutive breakpoints.
  std::vector<std::pair<Rational, Rational>> intervals;
  bool covered = false;
  bool directly_covered = false;
};

struct CoveredComponents {
  std::vector<CoveredComponent> components;
};

// Connected components of covered (affine imposing) intervals: projections
// of maximal additive 2-faces cover directly; additive edges merge the
// intervals of their two non-singleton projections (translation or
// reflection moves).
CoveredComponents generate_covered_intervals(const PiecewiseFunction& fn);

struct ExtremalityReport {
  bool is_extreme = false;
  long grid_denominator = 0;
  long perturbation_space_dimension = 0;
  // A nonzero perturbation direction when not extreme, normalized to
  // maximum absolute value 1.
  std::optional<PiecewiseFunction> perturbation;
  // Present when pi +/- epsilon * perturbation both pass minimality_test;
  // absent when the halving search was exhausted (direction only).
  std::optional<Rational> epsilon;
  CoveredComponents covered;
  // Set for discontinuous functions: the grid system with one-sided limit
  // unknowns is a best-effort analogue of the continuous theory.
  bool experimental = false;
};

// Grid-restriction extremality test for minimal functions with rational
// data.  The perturbation space lives on the grid (1/(refinement*q))Z,
// where q is the least common denominator of the breakpoints, the stored
// values and limits, and f.  Dimension 0 certifies extremality; otherwise
// a perturbation certificate is returned.
ExtremalityReport extremality_test(const PiecewiseFunction& fn, long refinement = 4);

}  // namespace cutgen

#endif  // CUTGEN_ANALYSIS_HPP_
