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

#ifndef CUTGEN_PIECEWISE_HPP_
#define CUTGEN_PIECEWISE_HPP_

#include <optional>
#include <vector>

#include "cutgen/rational.hpp"

namespace cutgen {

// Value and one-sided limits of a function at a point:
// (pi(x), pi(x+), pi(x-)).  At a continuity point all three agree.
struct LimitTriple {
  Rational value;
  Rational right;
  Rational left;

  bool is_continuous() const { return value == right && value == left; }
  friend bool operator==(const LimitTriple&, const LimitTriple&) = default;
};

// Approach side for one-sided evaluation: the stored value, the limit
// from the right, or the limit from the left.
enum class Side { kValue = 0, kRight = 1, kLeft = -1 };

// The affine piece of the function on the smallest face of its breakpoint
// complex containing a point: either a single breakpoint (slope 0) or a
// closed interval between consecutive breakpoints.
struct PieceDescriptor {
  Rational face_lo;
  Rational face_hi;  // == face_lo for a breakpoint face
  Rational slope;
  Rational value_at_left;

  bool is_breakpoint_face() const { return face_lo == face_hi; }
  // pi_I(x) for x in the face.
  Rational at(const Rational& x) const { return value_at_left + slope * (x - face_lo); }
};

// A Z-periodic piecewise linear function, possibly discontinuous,
// represented by its restriction to [0, 1]: an increasing breakpoint list
// x0 = 0 < x1 < ... < xn = 1 and a limit triple at each breakpoint.  On
// each open interval (xi, xi+1) the function is the affine interpolation
// of limits[i].right and limits[i+1].left.  The triples at 0 and 1 store
// the periodic closure redundantly: limits[0].value == limits[n].value,
// limits[0].left == limits[n].left (the limit from below 1), and
// limits[n].right == limits[0].right.
//
// Instances are immutable after construction; all operations are pure.
class PiecewiseFunction {
 public:
  static PiecewiseFunction from_breakpoints_and_values(
      std::vector<Rational> breakpoints, const std::vector<Rational>& values,
      std::optional<Rational> declared_f = std::nullopt);

  static PiecewiseFunction from_breakpoints_and_limits(
      std::vector<Rational> breakpoints, std::vector<LimitTriple> limits,
      std::optional<Rational> declared_f = std::nullopt);

  // pi(x mod 1); at a breakpoint this is the stored value, never a limit.
  Rational operator()(const Rational& x) const;

  // (pi(x), pi(x+), pi(x-)) at x mod 1; limits at 0 and 1 wrap periodically.
  LimitTriple limits_at(const Rational& x) const;

  // One-sided evaluation with periodic reduction preserving the side.
  Rational limit_value(const Rational& x, Side side) const;

  PieceDescriptor which_function(const Rational& x) const;

  const std::vector<Rational>& end_points() const { return breakpoints_; }
  std::vector<Rational> values_at_end_points() const;
  const std::vector<LimitTriple>& limits_at_end_points() const { return limits_; }
  bool is_continuous() const { return is_continuous_; }
  int number_of_slopes() const;

  // Slope of the open interval (x_i, x_{i+1}).
  Rational slope_of_piece(std::size_t i) const;

  std::size_t piece_count() const { return breakpoints_.size() - 1; }
  const std::optional<Rational>& declared_f() const { return declared_f_; }

  friend bool operator==(const PiecewiseFunction&, const PiecewiseFunction&) = default;

 private:
  PiecewiseFunction(std::vector<Rational> breakpoints, std::vector<LimitTriple> limits,
                    std::optional<Rational> declared_f);

  // Index of the breakpoint equal to t, or the piece containing t.
  // t must be in [0, 1).  Returns (index, is_breakpoint).
  std::pair<std::size_t, bool> locate(const Rational& t) const;

  std::vector<Rational> breakpoints_;
  std::vector<LimitTriple> limits_;
  std::optional<Rational> declared_f_;
  bool is_continuous_ = true;
};

// Bundled accessor record; round-trips through from_breakpoints_and_limits.
struct FunctionSummary {
  std::vector<Rational> end_points;
  std::vector<Rational> values_at_end_points;
  std::vector<LimitTriple> limits_at_end_points;
  bool is_continuous;
  int number_of_slopes;
};

FunctionSummary accessors(const PiecewiseFunction& fn);

}  // namespace cutgen

#endif  // CUTGEN_PIECEWISE_HPP_
