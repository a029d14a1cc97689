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

#include <algorithm>
#include <random>

#include "cutgen/analysis.hpp"
#include "cutgen/compendium.hpp"
#include "cutgen/linear_system.hpp"
#include "test_util.hpp"

namespace cutgen {
namespace {

using testing::R;

bool face_in_set(const AdditiveFaceSet& set, const char* i_lo, const char* i_hi,
                 const char* j_lo, const char* j_hi, const char* k_lo,
                 const char* k_hi) {
  const std::array<IntervalOrPoint, 3> key = {IntervalOrPoint{R(i_lo), R(i_hi)},
                                              IntervalOrPoint{R(j_lo), R(j_hi)},
                                              IntervalOrPoint{R(k_lo), R(k_hi)}};
  for (const AdditiveFace& af : set.faces) {
    if (af.face.canonical_key() == key) return true;
  }
  return false;
}

TEST_CASE("subadditivity verdicts") {
  CHECK(subadditivity_test(gmic(R("4/5"))).subadditive);
  CHECK(subadditivity_test(two_sided_discont_demo()).subadditive);

  const SubadditivityResult bad = subadditivity_test(not_minimal_2());
  CHECK_FALSE(bad.subadditive);
  bool found = false;
  for (const VertexSign& v : bad.violations) {
    if (v.vertex == Point{R("1/5"), R("1/5")} && v.slack == R("-1/10")) found = true;
    CHECK(v.slack < R("0"));
  }
  CHECK(found);
}

TEST_CASE("symmetry verdicts") {
  CHECK(symmetry_test(gmic(R("4/5")), R("4/5")).symmetric);
  CHECK(symmetry_test(not_minimal_2(), R("4/5")).symmetric);

  const SymmetryResult off = symmetry_test(gmic(R("4/5")), R("1/2"));
  CHECK_FALSE(off.symmetric);
  bool at_zero = false;
  for (const SymmetryViolation& v : off.violations) {
    if (v.x == R("0") && v.residual == R("-3/8")) at_zero = true;  // pi(1/2) = 5/8
  }
  CHECK(at_zero);
  CHECK_THROWS_AS(symmetry_test(gmic(R("4/5")), R("3/2")), std::invalid_argument);
}

TEST_CASE("find_f") {
  CHECK(find_f(gmic(R("4/5"))) == R("4/5"));
  CHECK(find_f(two_sided_discont_demo()) == R("1/2"));
  // Without a declared f the smallest breakpoint with value 1 wins.
  const PiecewiseFunction bare = PiecewiseFunction::from_breakpoints_and_values(
      {R("0"), R("4/5"), R("1")}, {R("0"), R("1"), R("0")});
  CHECK(find_f(bare) == R("4/5"));
  const PiecewiseFunction zero = PiecewiseFunction::from_breakpoints_and_values(
      {R("0"), R("1")}, {R("0"), R("0")});
  CHECK_THROWS_AS(find_f(zero), std::domain_error);
}

TEST_CASE("minimality verdicts") {
  const MinimalityReport good = minimality_test(gmic(R("4/5")));
  CHECK(good.is_minimal);
  CHECK(good.f_used == R("4/5"));

  const MinimalityReport bad = minimality_test(not_minimal_2());
  CHECK_FALSE(bad.is_minimal);
  CHECK(bad.range_violations.empty());
  CHECK(bad.symmetry_violations.empty());
  CHECK_FALSE(bad.subadditivity_violations.empty());

  CHECK(minimality_test(two_sided_discont_demo()).is_minimal);
  CHECK(minimality_test(demo_not_extreme()).is_minimal);

  // Out-of-range values are reported as range violations.
  const PiecewiseFunction spike = PiecewiseFunction::from_breakpoints_and_values(
      {R("0"), R("1/2"), R("1")}, {R("0"), R("3/2"), R("0")}, R("1/2"));
  const MinimalityReport range = minimality_test(spike);
  CHECK_FALSE(range.is_minimal);
  bool out_of_range = false;
  for (const RangeViolation& v : range.range_violations) {
    if (v.x == R("1/2") && v.value == R("3/2")) out_of_range = true;
  }
  CHECK(out_of_range);
}

TEST_CASE("minimality implies subadditivity and pi(f) = 1") {
  for (const PiecewiseFunction& fn :
       {gmic(R("4/5")), gmic(R("1/3")), two_sided_discont_demo(), demo_not_extreme()}) {
    const MinimalityReport report = minimality_test(fn);
    REQUIRE(report.is_minimal);
    CHECK(subadditivity_test(fn).subadditive);
    CHECK(fn(report.f_used) == R("1"));
  }
}

TEST_CASE("maximal additive faces of gmic") {
  const AdditiveFaceSet faces = generate_maximal_additive_faces(gmic(R("4/5")));
  CHECK(faces.faces.size() == 4);
  CHECK(face_in_set(faces, "0", "4/5", "0", "4/5", "0", "4/5"));
  CHECK(face_in_set(faces, "4/5", "1", "4/5", "1", "9/5", "2"));
  CHECK(face_in_set(faces, "0", "0", "4/5", "1", "4/5", "1"));
  CHECK(face_in_set(faces, "4/5", "1", "0", "0", "4/5", "1"));
}

TEST_CASE("maximal additive faces of the two-sided demo") {
  const AdditiveFaceSet faces = generate_maximal_additive_faces(two_sided_discont_demo());
  CHECK(faces.faces.size() == 6);
  CHECK(face_in_set(faces, "0", "0", "0", "1/2", "0", "1/2"));
  CHECK(face_in_set(faces, "0", "0", "1/2", "1", "1/2", "1"));
  CHECK(face_in_set(faces, "0", "1/2", "0", "0", "0", "1/2"));
  CHECK(face_in_set(faces, "1/2", "1", "0", "0", "1/2", "1"));
  CHECK(face_in_set(faces, "0", "1/2", "0", "1/2", "1/2", "1/2"));
  CHECK(face_in_set(faces, "1/2", "1", "1/2", "1", "3/2", "3/2"));
  for (const AdditiveFace& af : faces.faces) CHECK(af.face.dimension == 1);
}

TEST_CASE("additive face set properties") {
  for (const PiecewiseFunction& fn :
       {gmic(R("4/5")), two_sided_discont_demo(), demo_not_extreme()}) {
    const AdditiveFaceSet set = generate_maximal_additive_faces(fn);
    // Inclusion-maximality: no listed face inside another listed face.
    for (const AdditiveFace& a : set.faces) {
      for (const AdditiveFace& b : set.faces) {
        if (same_face(a.face, b.face)) continue;
        bool inside = true;
        for (const Point& v : a.face.vertices) {
          if (!b.face.contains(v)) { inside = false; break; }
        }
        CHECK_FALSE(inside);
      }
    }
    // The additive set is invariant under swapping x and y.
    for (const AdditiveFace& a : set.faces) {
      bool transpose_found = false;
      const std::array<IntervalOrPoint, 3> key = {a.face.projections[kAxisY],
                                                  a.face.projections[kAxisX],
                                                  a.face.projections[kAxisSum]};
      for (const AdditiveFace& b : set.faces) {
        if (b.face.canonical_key() == key) transpose_found = true;
      }
      CHECK(transpose_found);
    }
  }
  CHECK_THROWS_AS(generate_maximal_additive_faces(not_minimal_2()), std::domain_error);
}

TEST_CASE("covered intervals of gmic") {
  const CoveredComponents covered = generate_covered_intervals(gmic(R("4/5")));
  REQUIRE(covered.components.size() == 2);
  for (const CoveredComponent& c : covered.components) {
    CHECK(c.covered);
    CHECK(c.directly_covered);
    CHECK(c.intervals.size() == 1);
  }
  CHECK(covered.components[0].intervals[0] == std::pair{R("0"), R("4/5")});
  CHECK(covered.components[1].intervals[0] == std::pair{R("4/5"), R("1")});
}

TEST_CASE("covered intervals of the two-sided demo are uncovered") {
  const CoveredComponents covered = generate_covered_intervals(two_sided_discont_demo());
  REQUIRE(covered.components.size() == 2);
  for (const CoveredComponent& c : covered.components) {
    CHECK_FALSE(c.covered);
    CHECK_FALSE(c.directly_covered);
  }
}

TEST_CASE("components partition the base intervals") {
  for (const PiecewiseFunction& fn :
       {gmic(R("4/5")), two_sided_discont_demo(), demo_not_extreme()}) {
    const CoveredComponents covered = generate_covered_intervals(fn);
    std::vector<std::pair<Rational, Rational>> all;
    for (const CoveredComponent& c : covered.components) {
      for (const auto& iv : c.intervals) all.push_back(iv);
    }
    std::sort(all.begin(), all.end());
    const std::vector<Rational>& b = fn.end_points();
    REQUIRE(all.size() == b.size() - 1);
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
      CHECK(all[i] == std::pair{b[i], b[i + 1]});
    }
  }
}

TEST_CASE("covered point set is invariant under breakpoint refinement") {
  const PiecewiseFunction g = gmic(R("4/5"));
  std::vector<Rational> fine_b;
  std::vector<Rational> fine_v;
  for (long i = 0; i <= 20; ++i) {
    fine_b.emplace_back(i, 20);
    fine_v.push_back(g(Rational(i, 20)));
  }
  const PiecewiseFunction refined =
      PiecewiseFunction::from_breakpoints_and_values(fine_b, fine_v, R("4/5"));

  const auto covered_point_set = [](const CoveredComponents& cc) {
    std::vector<std::pair<Rational, Rational>> covered;
    for (const CoveredComponent& c : cc.components) {
      if (!c.covered) continue;
      for (const auto& iv : c.intervals) covered.push_back(iv);
    }
    return testing::merge_intervals(covered);
  };
  CHECK(covered_point_set(generate_covered_intervals(g)) ==
        covered_point_set(generate_covered_intervals(refined)));
}

TEST_CASE("linear system rank and nullspace") {
  LinearSystem sys(3);
  sys.add_equation({{0, R("1")}, {1, R("-1")}});
  sys.add_equation({{1, R("1")}, {2, R("-1")}});
  sys.add_equation({{0, R("1")}, {2, R("-1")}});  // dependent
  CHECK(sys.rank() == 2);
  CHECK(sys.nullity() == 1);
  const auto free_cols = sys.free_columns();
  REQUIRE(free_cols.size() == 1);
  const std::vector<Rational> v = sys.nullspace_vector(free_cols[0]);
  CHECK(v == std::vector<Rational>{R("1"), R("1"), R("1")});

  // Random sparse homogeneous systems: every nullspace vector solves
  // every added equation.
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t cols = 6 + gen() % 5;
    LinearSystem rand_sys(cols);
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
    for (int e = 0; e < 12; ++e) {
      std::vector<std::pair<std::size_t, Rational>> terms;
      const int nnz = 1 + gen() % 3;
      for (int t = 0; t < nnz; ++t) {
        terms.emplace_back(gen() % cols,
                           Rational(static_cast<long>(gen() % 9) - 4));
      }
      rows.push_back(terms);
      rand_sys.add_equation(terms);
    }
    CHECK(rand_sys.rank() + rand_sys.nullity() == cols);
    for (std::size_t free_col : rand_sys.free_columns()) {
      const std::vector<Rational> x = rand_sys.nullspace_vector(free_col);
      for (const auto& terms : rows) {
        Rational acc(0);
        for (const auto& [col, coeff] : terms) acc += coeff * x[col];
        CHECK(acc == R("0"));
      }
    }
  }
}

TEST_CASE("gmic is extreme on the refined grid") {
  const ExtremalityReport report = extremality_test(gmic(R("4/5")));
  CHECK(report.is_extreme);
  CHECK(report.grid_denominator == 20);
  CHECK(report.perturbation_space_dimension == 0);
  CHECK_FALSE(report.perturbation.has_value());
  CHECK_FALSE(report.experimental);
  REQUIRE(report.covered.components.size() == 2);
  CHECK(report.covered.components[0].covered);
  CHECK(report.covered.components[1].covered);
}

TEST_CASE("demo_not_extreme yields a valid perturbation certificate") {
  const PiecewiseFunction fn = demo_not_extreme();
  const ExtremalityReport report = extremality_test(fn);
  CHECK_FALSE(report.is_extreme);
  CHECK(report.grid_denominator == 160);
  CHECK(report.perturbation_space_dimension > 0);
  REQUIRE(report.perturbation.has_value());
  REQUIRE(report.epsilon.has_value());
  CHECK(*report.epsilon > R("0"));

  // The perturbation is nonzero somewhere.
  bool nonzero = false;
  for (const LimitTriple& t : report.perturbation->limits_at_end_points()) {
    if (!t.value.is_zero() || !t.right.is_zero() || !t.left.is_zero()) nonzero = true;
  }
  CHECK(nonzero);

  // Re-verify the certificate: pi +/- eps*phi both minimal.
  const auto shifted = [&](int sign) {
    const std::vector<Rational>& bk = report.perturbation->end_points();
    std::vector<LimitTriple> triples;
    for (const Rational& x : bk) {
      const LimitTriple a = fn.limits_at(x);
      const LimitTriple d = report.perturbation->limits_at(x);
      const Rational e = *report.epsilon * Rational(sign);
      triples.push_back(
          LimitTriple{a.value + e * d.value, a.right + e * d.right, a.left + e * d.left});
    }
    return PiecewiseFunction::from_breakpoints_and_limits(bk, triples, R("4/5"));
  };
  CHECK(minimality_test(shifted(+1)).is_minimal);
  CHECK(minimality_test(shifted(-1)).is_minimal);
}

TEST_CASE("extremality rejects non-minimal input") {
  CHECK_THROWS_AS(extremality_test(not_minimal_2()), std::domain_error);
  CHECK_THROWS_AS(extremality_test(gmic(R("4/5")), 0), std::invalid_argument);
}

TEST_CASE("discontinuous extremality is experimental and certifies") {
  const ExtremalityReport report = extremality_test(two_sided_discont_demo());
  CHECK(report.experimental);
  CHECK_FALSE(report.is_extreme);
  CHECK(report.perturbation_space_dimension > 0);
  REQUIRE(report.perturbation.has_value());
  REQUIRE(report.epsilon.has_value());
}

TEST_CASE("midpoint of two distinct minimal functions is not extreme") {
  // demo_not_extreme is the midpoint of gmic(4/5) and the function with
  // plateau value 1/2 between 1/5 and 3/5.
  const PiecewiseFunction a = gmic(R("4/5"));
  const PiecewiseFunction b = PiecewiseFunction::from_breakpoints_and_values(
      {R("0"), R("1/5"), R("2/5"), R("3/5"), R("4/5"), R("1")},
      {R("0"), R("1/2"), R("1/2"), R("1/2"), R("1"), R("0")}, R("4/5"));
  CHECK(minimality_test(a).is_minimal);
  CHECK(minimality_test(b).is_minimal);

  const PiecewiseFunction mid = demo_not_extreme();
  for (long i = 0; i <= 10; ++i) {
    const Rational x(i, 10);
    CHECK(mid(x) == (a(x) + b(x)) / R("2"));
  }
  CHECK(minimality_test(mid).is_minimal);
  CHECK_FALSE(extremality_test(mid).is_extreme);
}

TEST_CASE("subadditivity verdict matches the grid oracle") {
  // Continuous functions with breakpoints on (1/q)Z: the scan agrees with
  // brute force over the (1/4q)Z grid, and the vertex minimum of delta_pi
  // is the global minimum over the refinement grid.
  const struct { PiecewiseFunction fn; long grid; } cases[] = {
      {gmic(R("4/5")), 20},
      {not_minimal_2(), 20},
      {demo_not_extreme(), 20},
      {gmic(R("1/3")), 12},
  };
  for (const auto& c : cases) {
    const bool verdict = subadditivity_test(c.fn).subadditive;
    const bool oracle = testing::oracle_grid_min_delta_pi(c.fn, c.grid) >= R("0");
    CHECK(verdict == oracle);

    Rational vertex_min = delta_pi(c.fn, R("0"), R("0"));
    for (const Point& v : vertices_of_complex(c.fn)) {
      vertex_min = std::min(vertex_min, delta_pi(c.fn, v.x, v.y));
    }
    CHECK(vertex_min == testing::oracle_grid_min_delta_pi(c.fn, c.grid));
  }
}

TEST_CASE("minimality without f requires a breakpoint at value 1") {
  const PiecewiseFunction zero = PiecewiseFunction::from_breakpoints_and_values(
      {R("0"), R("1")}, {R("0"), R("0")});
  CHECK_THROWS_AS(minimality_test(zero), std::domain_error);
  CHECK_FALSE(minimality_test(zero, R("1/2")).is_minimal);
}

TEST_CASE("extremality rejects grids beyond machine range") {
  // 5/2^62 forces a grid denominator past the long range.
  const Rational tiny(Integer(5), Integer(1) << 62);
  CHECK_THROWS_AS(extremality_test(gmic(tiny)), std::domain_error);
}

}  // namespace
}  // namespace cutgen
