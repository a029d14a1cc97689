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

#include "cutgen/compendium.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "cutgen/json_io.hpp"

namespace cutgen {

PiecewiseFunction gmic(const Rational& f) {
  if (!(Rational(0) < f && f < Rational(1))) {
    throw std::invalid_argument("gmic: f must lie strictly between 0 and 1");
  }
  return PiecewiseFunction::from_breakpoints_and_values(
      {Rational(0), f, Rational(1)}, {Rational(0), Rational(1), Rational(0)}, f);
}

PiecewiseFunction not_minimal_2() {
  return PiecewiseFunction::from_breakpoints_and_values(
      {Rational(0), Rational(1, 5), Rational(3, 5), Rational(4, 5), Rational(1)},
      {Rational(0), Rational(1, 5), Rational(4, 5), Rational(1), Rational(0)},
      Rational(4, 5));
}

PiecewiseFunction two_sided_discont_demo() {
  const Rational half(1, 2);
  return PiecewiseFunction::from_breakpoints_and_limits(
      {Rational(0), half, Rational(1)},
      {LimitTriple{Rational(0), half, half}, LimitTriple{Rational(1), half, half},
       LimitTriple{Rational(0), half, half}},
      half);
}

PiecewiseFunction demo_not_extreme() {
  return PiecewiseFunction::from_breakpoints_and_values(
      {Rational(0), Rational(1, 5), Rational(2, 5), Rational(3, 5), Rational(4, 5),
       Rational(1)},
      {Rational(0), Rational(3, 8), Rational(1, 2), Rational(5, 8), Rational(1),
       Rational(0)},
      Rational(4, 5));
}

namespace {

// Random scheme v1: every draw reduces a raw mt19937_64 output modulo the
// range, so the stream is identical on every platform.
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t below(std::uint64_t n) { return gen_() % n; }
  bool coin() { return (gen_() & 1u) != 0; }
  bool with_probability(const Rational& p) {
    const std::uint64_t den = p.denominator().get_ui();
    const std::uint64_t num = p.numerator().get_ui();
    return below(den) < num;
  }
  Rational grid_value(long ygrid) {
    return Rational(static_cast<long>(below(ygrid + 1)), ygrid);
  }

 private:
  std::mt19937_64 gen_;
};

PiecewiseFunction assemble(const std::map<Rational, LimitTriple>& data,
                           const std::optional<Rational>& f) {
  std::vector<Rational> breakpoints;
  std::vector<LimitTriple> limits;
  for (const auto& [x, triple] : data) {
    breakpoints.push_back(x);
    limits.push_back(triple);
  }
  breakpoints.push_back(Rational(1));
  limits.push_back(data.at(Rational(0)));
  return PiecewiseFunction::from_breakpoints_and_limits(breakpoints, limits, f);
}

std::optional<PiecewiseFunction> try_random_symmetric(long xgrid, long ygrid,
                                                      const Rational& proba,
                                                      Draws& draws) {
  const Rational f(static_cast<long>(1 + draws.below(xgrid - 1)), xgrid);
  std::set<Rational> support = {Rational(0), f};
  for (long i = 1; i < xgrid; ++i) {
    const Rational g(i, xgrid);
    if (g != f && draws.coin()) support.insert(g);
  }
  for (const Rational& s : std::set<Rational>(support)) {
    support.insert((f - s).mod1());
  }

  // Fixed points of x -> (f - x) mod 1 force the value 1/2.
  const Rational half(1, 2);
  const std::set<Rational> fixed = {(f / Rational(2)).mod1(),
                                    ((f + Rational(1)) / Rational(2)).mod1()};
  const bool half_on_grid = (half * Rational(ygrid)).is_integer();
  for (const Rational& x : fixed) {
    if (support.count(x) && !half_on_grid) return std::nullopt;
  }

  std::map<Rational, LimitTriple> data;
  for (const Rational& x : support) {
    if (data.count(x)) continue;
    const Rational y = (f - x).mod1();
    const bool continuous_here = draws.with_probability(proba);
    if (x == Rational(0)) {
      LimitTriple at0{Rational(0), Rational(0), Rational(0)};
      if (!continuous_here) {
        at0.right = draws.grid_value(ygrid);
        at0.left = draws.grid_value(ygrid);
      }
      data[x] = at0;
      data[y] = LimitTriple{Rational(1), Rational(1) - at0.left, Rational(1) - at0.right};
    } else if (x == y) {
      LimitTriple at{half, half, half};
      if (!continuous_here) {
        at.right = draws.grid_value(ygrid);
        at.left = Rational(1) - at.right;
      }
      data[x] = at;
    } else {
      const Rational v = draws.grid_value(ygrid);
      LimitTriple at{v, v, v};
      if (!continuous_here) {
        at.right = draws.grid_value(ygrid);
        at.left = draws.grid_value(ygrid);
      }
      data[x] = at;
      data[y] = LimitTriple{Rational(1) - v, Rational(1) - at.left, Rational(1) - at.right};
    }
  }
  return assemble(data, f);
}

PiecewiseFunction random_free(long xgrid, long ygrid, const Rational& proba,
                              Draws& draws) {
  std::map<Rational, LimitTriple> data;
  for (long i = 0; i < xgrid; ++i) {
    const Rational x(i, xgrid);
    if (i != 0 && !draws.coin()) continue;
    const Rational v = i == 0 ? Rational(0) : draws.grid_value(ygrid);
    LimitTriple at{v, v, v};
    if (!draws.with_probability(proba)) {
      at.right = draws.grid_value(ygrid);
      at.left = draws.grid_value(ygrid);
    }
    data[x] = at;
  }
  return assemble(data, std::nullopt);
}

}  // namespace

PiecewiseFunction random_piecewise_function(long xgrid, long ygrid,
                                            const Rational& continuous_proba,
                                            bool symmetry, std::uint64_t seed) {
  if (xgrid < 1 || ygrid < 1) {
    throw std::invalid_argument("random_piecewise_function: grids must be positive");
  }
  if (continuous_proba < Rational(0) || continuous_proba > Rational(1)) {
    throw std::invalid_argument(
        "random_piecewise_function: continuous_proba must lie in [0, 1]");
  }
  Draws draws(seed);
  if (!symmetry) return random_free(xgrid, ygrid, continuous_proba, draws);
  if (xgrid < 2) {
    throw std::runtime_error(
        "random_piecewise_function: infeasible constraints, no grid point "
        "available for f");
  }
  for (int attempt = 0; attempt < 32; ++attempt) {
    if (auto fn = try_random_symmetric(xgrid, ygrid, continuous_proba, draws)) {
      return *fn;
    }
  }
  throw std::runtime_error(
      "random_piecewise_function: retry budget exhausted, constraints "
      "infeasible (ygrid too coarse to honor symmetry)");
}

const std::vector<CompendiumEntry>& compendium_entries() {
  static const std::vector<CompendiumEntry>* entries = [] {
    auto* list = new std::vector<CompendiumEntry>;
    list->push_back(CompendiumEntry{
        "gmic",
        "two-slope function with breakpoints [0, f, 1] and values [0, 1, 0]",
        {{"f", "4/5"}},
        ExpectedProperties{true, true, true},
        [](const std::map<std::string, std::string>& params) {
          return gmic(Rational::parse(params.at("f")));
        }});
    list->push_back(CompendiumEntry{
        "not_minimal_2",
        "continuous, symmetric for f = 4/5, not subadditive",
        {},
        ExpectedProperties{false, false, true},
        [](const std::map<std::string, std::string>&) { return not_minimal_2(); }});
    list->push_back(CompendiumEntry{
        "two_sided_discont_demo",
        "minimal, two-sided discontinuous at 0 and 1/2, f = 1/2",
        {},
        ExpectedProperties{true, false, false},
        [](const std::map<std::string, std::string>&) {
          return two_sided_discont_demo();
        }});
    list->push_back(CompendiumEntry{
        "demo_not_extreme",
        "minimal but not extreme; midpoint of two distinct minimal functions",
        {},
        ExpectedProperties{true, false, true},
        [](const std::map<std::string, std::string>&) { return demo_not_extreme(); }});
    list->push_back(CompendiumEntry{
        "json_file",
        "loads a function from a JSON file in the standard function format",
        {{"path", ""}},
        ExpectedProperties{},
        [](const std::map<std::string, std::string>& params) {
          const auto it = params.find("path");
          if (it == params.end() || it->second.empty()) {
            throw std::invalid_argument("json_file: missing required parameter 'path'");
          }
          return load_function_json(it->second);
        }});
    return list;
  }();
  return *entries;
}

const CompendiumEntry* find_compendium_entry(std::string_view name) {
  for (const CompendiumEntry& entry : compendium_entries()) {
    if (entry.name == name) return &entry;
  }
  return nullptr;
}

}  // namespace cutgen
