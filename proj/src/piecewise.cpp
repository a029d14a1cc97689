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

#include "cutgen/piecewise.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace cutgen {

namespace {

void check_breakpoints(const std::vector<Rational>& breakpoints) {
  if (breakpoints.size() < 2) {
    throw std::invalid_argument("piecewise: need at least breakpoints 0 and 1");
  }
  if (breakpoints.front() != Rational(0) || breakpoints.back() != Rational(1)) {
    throw std::invalid_argument("piecewise: breakpoints must start at 0 and end at 1");
  }
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1])) {
      throw std::invalid_argument("piecewise: breakpoints must be strictly increasing");
    }
  }
}

void check_declared_f(const std::optional<Rational>& f) {
  if (f && !(Rational(0) < *f && *f < Rational(1))) {
    throw std::invalid_argument("piecewise: f must lie strictly between 0 and 1");
  }
}

}  // namespace

PiecewiseFunction::PiecewiseFunction(std::vector<Rational> breakpoints,
                                     std::vector<LimitTriple> limits,
                                     std::optional<Rational> declared_f)
    : breakpoints_(std::move(breakpoints)),
      limits_(std::move(limits)),
      declared_f_(std::move(declared_f)) {
  is_continuous_ = true;
  for (const LimitTriple& t : limits_) {
    if (!t.is_continuous()) {
      is_continuous_ = false;
      break;
    }
  }
}

PiecewiseFunction PiecewiseFunction::from_breakpoints_and_values(
    std::vector<Rational> breakpoints, const std::vector<Rational>& values,
    std::optional<Rational> declared_f) {
  check_breakpoints(breakpoints);
  check_declared_f(declared_f);
  if (values.size() != breakpoints.size()) {
    throw std::invalid_argument("piecewise: breakpoints and values differ in length");
  }
  if (values.front() != values.back()) {
    throw std::invalid_argument(
        "piecewise: periodicity violation, values at 0 and 1 differ");
  }
  std::vector<LimitTriple> limits;
  limits.reserve(values.size());
  for (const Rational& v : values) limits.push_back(LimitTriple{v, v, v});
  return PiecewiseFunction(std::move(breakpoints), std::move(limits),
                           std::move(declared_f));
}

PiecewiseFunction PiecewiseFunction::from_breakpoints_and_limits(
    std::vector<Rational> breakpoints, std::vector<LimitTriple> limits,
    std::optional<Rational> declared_f) {
  check_breakpoints(breakpoints);
  check_declared_f(declared_f);
  if (limits.size() != breakpoints.size()) {
    throw std::invalid_argument("piecewise: breakpoints and limits differ in length");
  }
  const LimitTriple& at0 = limits.front();
  const LimitTriple& at1 = limits.back();
  if (at0.value != at1.value || at0.left != at1.left || at0.right != at1.right) {
    throw std::invalid_argument("piecewise: periodic closure violated at 0/1");
  }
  return PiecewiseFunction(std::move(breakpoints), std::move(limits),
                           std::move(declared_f));
}

std::pair<std::size_t, bool> PiecewiseFunction::locate(const Rational& t) const {
  // t in [0, 1); the last breakpoint 1 is never hit.
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return {i, breakpoints_[i] == t};
}

Rational PiecewiseFunction::operator()(const Rational& x) const {
  const Rational t = x.mod1();
  const auto [i, at_breakpoint] = locate(t);
  if (at_breakpoint) return limits_[i].value;
  const Rational& a = breakpoints_[i];
  const Rational& b = breakpoints_[i + 1];
  const Rational& fa = limits_[i].right;
  const Rational& fb = limits_[i + 1].left;
  return fa + (fb - fa) * (t - a) / (b - a);
}

LimitTriple PiecewiseFunction::limits_at(const Rational& x) const {
  const Rational t = x.mod1();
  const auto [i, at_breakpoint] = locate(t);
  if (at_breakpoint) return limits_[i];
  const Rational v = (*this)(t);
  return LimitTriple{v, v, v};
}

Rational PiecewiseFunction::limit_value(const Rational& x, Side side) const {
  const LimitTriple t = limits_at(x);
  switch (side) {
    case Side::kRight: return t.right;
    case Side::kLeft: return t.left;
    default: return t.value;
  }
}

PieceDescriptor PiecewiseFunction::which_function(const Rational& x) const {
  const Rational t = x.mod1();
  const auto [i, at_breakpoint] = locate(t);
  if (at_breakpoint) {
    return PieceDescriptor{breakpoints_[i], breakpoints_[i], Rational(0),
                           limits_[i].value};
  }
  return PieceDescriptor{breakpoints_[i], breakpoints_[i + 1], slope_of_piece(i),
                         limits_[i].right};
}

std::vector<Rational> PiecewiseFunction::values_at_end_points() const {
  std::vector<Rational> values;
  values.reserve(limits_.size());
  for (const LimitTriple& t : limits_) values.push_back(t.value);
  return values;
}

Rational PiecewiseFunction::slope_of_piece(std::size_t i) const {
  return (limits_[i + 1].left - limits_[i].right) /
         (breakpoints_[i + 1] - breakpoints_[i]);
}

int PiecewiseFunction::number_of_slopes() const {
  std::set<Rational> slopes;
  for (std::size_t i = 0; i < piece_count(); ++i) slopes.insert(slope_of_piece(i));
  return static_cast<int>(slopes.size());
}

FunctionSummary accessors(const PiecewiseFunction& fn) {
  return FunctionSummary{fn.end_points(), fn.values_at_end_points(),
                         fn.limits_at_end_points(), fn.is_continuous(),
                         fn.number_of_slopes()};
}

}  // namespace cutgen
