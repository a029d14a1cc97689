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

#include <doctest.h>

#include <random>

#include "cutgen/compendium.hpp"
#include "cutgen/piecewise.hpp"
#include "test_util.hpp"

namespace cutgen {
namespace {

using testing::R;

TEST_CASE("from_breakpoints_and_values interpolates") {
  const PiecewiseFunction fn = PiecewiseFunction::from_breakpoints_and_values(
      {R("0"), R("4/5"), R("1")}, {R("0"), R("1"), R("0")});
  CHECK(fn.slope_of_piece(0) == R("5/4"));
  CHECK(fn.slope_of_piece(1) == R("-5"));
  CHECK(fn.is_continuous());
  CHECK(fn.number_of_slopes() == 2);
}

TEST_CASE("zero function") {
  const PiecewiseFunction zero = PiecewiseFunction::from_breakpoints_and_values(
      {R("0"), R("1")}, {R("0"), R("0")});
  CHECK(zero(R("13/7")) == R("0"));
  CHECK(zero.number_of_slopes() == 1);
  CHECK(zero.which_function(R("2/3")).slope == R("0"));
}

TEST_CASE("collinear breakpoints are kept as given") {
  // No merging: a redundant breakpoint stays, and number_of_slopes counts
  // distinct slope values, not pieces.
  const PiecewiseFunction fn = PiecewiseFunction::from_breakpoints_and_values(
      {R("0"), R("1/2"), R("1")}, {R("0"), R("0"), R("0")});
  CHECK(fn.end_points().size() == 3);
  CHECK(fn.piece_count() == 2);
  CHECK(fn.number_of_slopes() == 1);
}

TEST_CASE("constructor errors") {
  CHECK_THROWS_AS(PiecewiseFunction::from_breakpoints_and_values(
                      {R("0"), R("1/2"), R("1")}, {R("0"), R("1"), R("1/2")}),
                  std::invalid_argument);  // periodicity violation
  CHECK_THROWS_AS(PiecewiseFunction::from_breakpoints_and_values(
                      {R("0"), R("3/4"), R("1/2"), R("1")},
                      {R("0"), R("1"), R("1"), R("0")}),
                  std::invalid_argument);  // unsorted
  CHECK_THROWS_AS(PiecewiseFunction::from_breakpoints_and_values(
                      {R("1/4"), R("1")}, {R("0"), R("0")}),
                  std::invalid_argument);  // must start at 0
  CHECK_THROWS_AS(PiecewiseFunction::from_breakpoints_and_values(
                      {R("0"), R("1")}, {R("0"), R("0"), R("0")}),
                  std::invalid_argument);  // length mismatch
  CHECK_THROWS_AS(PiecewiseFunction::from_breakpoints_and_limits(
                      {R("0"), R("1/2"), R("1")},
                      {LimitTriple{R("0"), R("0"), R("0")},
                       LimitTriple{R("1"), R("1"), R("1")}}),
                  std::invalid_argument);  // limits list one short
  CHECK_THROWS_AS(PiecewiseFunction::from_breakpoints_and_limits(
                      {R("0"), R("1")},
                      {LimitTriple{R("0"), R("0"), R("0")},
                       LimitTriple{R("0"), R("1"), R("0")}}),
                  std::invalid_argument);  // periodic closure violated
  CHECK_THROWS_AS(PiecewiseFunction::from_breakpoints_and_values(
                      {R("0"), R("1")}, {R("0"), R("0")}, R("1")),
                  std::invalid_argument);  // f out of range
}

TEST_CASE("evaluation at and between breakpoints") {
  const PiecewiseFunction g = gmic(R("4/5"));
  CHECK(g(R("2/5")) == R("1/2"));
  CHECK(g(R("9/5")) == R("1"));  // periodic reduction to 4/5
  CHECK(g(R("-1/5")) == R("1"));
  const PiecewiseFunction d = two_sided_discont_demo();
  CHECK(d(R("1/2")) == R("1"));
  CHECK(d(R("1/4")) == R("1/2"));
}

TEST_CASE("limits_at wraps periodically") {
  const PiecewiseFunction d = two_sided_discont_demo();
  CHECK(d.limits_at(R("1/2")) == LimitTriple{R("1"), R("1/2"), R("1/2")});
  CHECK(d.limits_at(R("0")) == LimitTriple{R("0"), R("1/2"), R("1/2")});
  CHECK(d.limits_at(R("1")) == LimitTriple{R("0"), R("1/2"), R("1/2")});
  const PiecewiseFunction g = gmic(R("4/5"));
  CHECK(g.limits_at(R("2/5")) == LimitTriple{R("1/2"), R("1/2"), R("1/2")});
}

TEST_CASE("which_function returns the smallest containing face") {
  const PiecewiseFunction g = gmic(R("4/5"));
  const PieceDescriptor interior = g.which_function(R("1/5"));
  CHECK_FALSE(interior.is_breakpoint_face());
  CHECK(interior.face_lo == R("0"));
  CHECK(interior.face_hi == R("4/5"));
  CHECK(interior.slope == R("5/4"));
  CHECK(interior.at(R("1/5")) == R("1/4"));
  const PieceDescriptor at_breakpoint = g.which_function(R("4/5"));
  CHECK(at_breakpoint.is_breakpoint_face());
  CHECK(at_breakpoint.face_lo == R("4/5"));
  CHECK(at_breakpoint.slope == R("0"));
  CHECK(at_breakpoint.value_at_left == R("1"));
}

TEST_CASE("accessors") {
  const PiecewiseFunction g = gmic(R("4/5"));
  const FunctionSummary s = accessors(g);
  CHECK(s.end_points == std::vector<Rational>{R("0"), R("4/5"), R("1")});
  CHECK(s.values_at_end_points == std::vector<Rational>{R("0"), R("1"), R("0")});
  CHECK(s.is_continuous);
  CHECK(s.number_of_slopes == 2);
  const FunctionSummary d = accessors(two_sided_discont_demo());
  CHECK_FALSE(d.is_continuous);
  CHECK(d.number_of_slopes == 1);
}

TEST_CASE("limits constructor with constant triples equals values constructor") {
  const std::vector<Rational> b = {R("0"), R("1/3"), R("1")};
  const std::vector<Rational> v = {R("0"), R("2/3"), R("0")};
  const PiecewiseFunction from_values =
      PiecewiseFunction::from_breakpoints_and_values(b, v);
  const PiecewiseFunction from_limits = PiecewiseFunction::from_breakpoints_and_limits(
      b, {LimitTriple{v[0], v[0], v[0]}, LimitTriple{v[1], v[1], v[1]},
          LimitTriple{v[2], v[2], v[2]}});
  CHECK(from_values == from_limits);
}

TEST_CASE("periodicity and interpolation properties") {
  std::mt19937_64 gen(17);
  const PiecewiseFunction fns[] = {gmic(R("4/5")), two_sided_discont_demo(),
                                   demo_not_extreme(), not_minimal_2()};
  for (const PiecewiseFunction& fn : fns) {
    for (int iter = 0; iter < 50; ++iter) {
      const Rational x(static_cast<long>(gen() % 400) - 200, static_cast<long>(gen() % 40) + 1);
      const long k = static_cast<long>(gen() % 9) - 4;
      CHECK(fn(x) == fn(x + Rational(k)));
      if (fn.is_continuous()) {
        const LimitTriple t = fn.limits_at(x);
        CHECK(t.value == t.right);
        CHECK(t.value == t.left);
      }
    }
    // Affine interpolation of the one-sided limits on each open interval.
    const auto& b = fn.end_points();
    const auto& limits = fn.limits_at_end_points();
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
      for (long num = 1; num <= 4; ++num) {
        const Rational t = b[i] + (b[i + 1] - b[i]) * Rational(num, 5);
        const Rational expected = limits[i].right + (limits[i + 1].left - limits[i].right) *
                                                        Rational(num, 5);
        CHECK(fn(t) == expected);
      }
    }
  }
}

TEST_CASE("round trip through accessors") {
  const PiecewiseFunction fns[] = {gmic(R("4/5")), two_sided_discont_demo(),
                                   demo_not_extreme()};
  for (const PiecewiseFunction& fn : fns) {
    const FunctionSummary s = accessors(fn);
    const PiecewiseFunction rebuilt = PiecewiseFunction::from_breakpoints_and_limits(
        s.end_points, s.limits_at_end_points, fn.declared_f());
    CHECK(rebuilt == fn);
  }
}

}  // namespace
}  // namespace cutgen
