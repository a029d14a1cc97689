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

#include "cutgen/analysis.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "cutgen/linear_system.hpp"

namespace cutgen {

namespace {

Face zero_face_at(const Point& p) {
  return *face_from_triple(IntervalOrPoint::point(p.x), IntervalOrPoint::point(p.y),
                           IntervalOrPoint::point(p.sum()));
}

}  // namespace

SubadditivityResult subadditivity_test(const PiecewiseFunction& fn) {
  SubadditivityResult result{true, {}};
  const std::vector<Point> verts = vertices_of_complex(fn);
  if (fn.is_continuous()) {
    // All limits equal the values, so the vertex values decide.
    for (const Point& v : verts) {
      const Rational slack = delta_pi(fn, v.x, v.y);
      if (slack.sign() < 0) {
        result.subadditive = false;
        result.violations.push_back(VertexSign{v, zero_face_at(v), slack});
      }
    }
    return result;
  }
  for (const Point& v : verts) {
    for (const VertexIncidence& inc : vertex_incidences(fn, v)) {
      const Rational slack = delta_pi_limit(fn, inc.face, inc.embedded);
      if (slack.sign() < 0) {
        result.subadditive = false;
        result.violations.push_back(VertexSign{v, inc.face, slack});
      }
    }
  }
  return result;
}

SymmetryResult symmetry_test(const PiecewiseFunction& fn, const Rational& f) {
  if (!(Rational(0) < f && f < Rational(1))) {
    throw std::invalid_argument("symmetry_test: f must lie strictly between 0 and 1");
  }
  SymmetryResult result{true, {}};
  std::set<Rational> points;
  for (const Rational& b : fn.end_points()) {
    points.insert(b.mod1());
    points.insert((f - b).mod1());
  }
  const Rational one(1);
  for (const Rational& x : points) {
    const Rational y = (f - x).mod1();
    const Rational residual = fn(x) + fn(y) - one;
    if (!residual.is_zero()) {
      result.symmetric = false;
      result.violations.push_back(SymmetryViolation{x, Side::kValue, Side::kValue, residual});
    }
    if (fn.is_continuous()) continue;
    const Rational r_right =
        fn.limit_value(x, Side::kRight) + fn.limit_value(y, Side::kLeft) - one;
    if (!r_right.is_zero()) {
      result.symmetric = false;
      result.violations.push_back(SymmetryViolation{x, Side::kRight, Side::kLeft, r_right});
    }
    const Rational r_left =
        fn.limit_value(x, Side::kLeft) + fn.limit_value(y, Side::kRight) - one;
    if (!r_left.is_zero()) {
      result.symmetric = false;
      result.violations.push_back(SymmetryViolation{x, Side::kLeft, Side::kRight, r_left});
    }
  }
  return result;
}

Rational find_f(const PiecewiseFunction& fn) {
  if (fn.declared_f()) return *fn.declared_f();
  const std::vector<Rational>& b = fn.end_points();
  const std::vector<LimitTriple>& limits = fn.limits_at_end_points();
  const Rational one(1);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (limits[i].value == one) return b[i];
  }
  throw std::domain_error("find_f: no breakpoint with value 1");
}

MinimalityReport minimality_test(const PiecewiseFunction& fn, std::optional<Rational> f) {
  MinimalityReport report;
  report.f_used = f ? *f : find_f(fn);

  const std::vector<Rational>& b = fn.end_points();
  const std::vector<LimitTriple>& limits = fn.limits_at_end_points();
  const Rational zero(0), one(1);
  if (limits.front().value != zero) {
    report.range_violations.push_back(RangeViolation{zero, Side::kValue, limits.front().value});
  }
  // The triple at 1 mirrors the triple at 0; scan 0..n-1.
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    const LimitTriple& t = limits[i];
    const std::array<std::pair<Side, const Rational*>, 3> sides = {
        std::pair{Side::kValue, &t.value}, std::pair{Side::kRight, &t.right},
        std::pair{Side::kLeft, &t.left}};
    for (const auto& [side, value] : sides) {
      if (*value < zero || *value > one) {
        report.range_violations.push_back(RangeViolation{b[i], side, *value});
      }
    }
  }

  SubadditivityResult sub = subadditivity_test(fn);
  report.subadditivity_violations = std::move(sub.violations);
  SymmetryResult sym = symmetry_test(fn, report.f_used);
  report.symmetry_violations = std::move(sym.violations);
  report.is_minimal = !report.has_violations();
  return report;
}

AdditiveFaceSet generate_maximal_additive_faces(const PiecewiseFunction& fn) {
  if (!subadditivity_test(fn).subadditive) {
    throw std::domain_error("generate_maximal_additive_faces: function is not subadditive");
  }

  const std::vector<Face> faces = enumerate_faces(fn);
  std::vector<AdditiveFace> additive;

  if (fn.is_continuous()) {
    for (const Face& face : faces) {
      bool zero_at_all = true;
      for (const Point& v : face.vertices) {
        if (!delta_pi(fn, v.x, v.y).is_zero()) { zero_at_all = false; break; }
      }
      if (zero_at_all) additive.push_back(AdditiveFace{face, std::nullopt});
    }
  } else {
    for (const Face& face : faces) {
      bool is_additive = false;
      std::optional<Face> witness;
      if (face.dimension == 2) {
        is_additive = true;
        for (const Point& v : face.vertices) {
          if (!delta_pi_limit(fn, face, v).is_zero()) { is_additive = false; break; }
        }
      } else if (face.dimension == 1) {
        is_additive = true;
        for (const Point& v : face.vertices) {
          if (!delta_pi_limit(fn, face, v).is_zero()) { is_additive = false; break; }
        }
        if (!is_additive) {
          // The two 2-faces containing this edge; the limit from either
          // may vanish at both edge vertices.
          const Point& v1 = face.vertices[0];
          const Point& v2 = face.vertices[1];
          for (const VertexIncidence& inc : vertex_incidences(fn, v1)) {
            if (inc.face.dimension != 2) continue;
            // Integer shift embedding the whole edge into the candidate face.
            const Rational sx = inc.embedded.x - v1.x;
            const Rational sy = inc.embedded.y - v1.y;
            const Point w1 = inc.embedded;
            const Point w2{v2.x + sx, v2.y + sy};
            if (!std::binary_search(inc.face.vertices.begin(), inc.face.vertices.end(), w2)) {
              continue;  // the edge does not embed into this 2-face
            }
            if (delta_pi_limit(fn, inc.face, w1).is_zero() &&
                delta_pi_limit(fn, inc.face, w2).is_zero()) {
              is_additive = true;
              witness = inc.face;
              break;
            }
          }
        }
      } else {
        const Point& v = face.vertices.front();
        if (delta_pi(fn, v.x, v.y).is_zero()) {
          is_additive = true;
        } else {
          for (const VertexIncidence& inc : vertex_incidences(fn, v)) {
            if (delta_pi_limit(fn, inc.face, inc.embedded).is_zero()) {
              is_additive = true;
              witness = inc.face;
              break;
            }
          }
        }
      }
      if (is_additive) additive.push_back(AdditiveFace{face, std::move(witness)});
    }
  }

  // Keep inclusion-maximal faces only.
  AdditiveFaceSet out;
  for (std::size_t i = 0; i < additive.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < additive.size() && maximal; ++j) {
      if (i == j) continue;
      const Face& small = additive[i].face;
      const Face& big = additive[j].face;
      if (big.dimension <= small.dimension) continue;
      bool inside = true;
      for (const Point& v : small.vertices) {
        if (!big.contains(v)) { inside = false; break; }
      }
      if (inside) maximal = false;
    }
    if (maximal) out.faces.push_back(additive[i]);
  }
  return out;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

CoveredComponents generate_covered_intervals(const PiecewiseFunction& fn) {
  const AdditiveFaceSet additive = generate_maximal_additive_faces(fn);
  const std::vector<Rational>& b = fn.end_points();
  const std::size_t n = b.size() - 1;
  UnionFind uf(n);
  std::vector<bool> direct(n, false);

  // Base intervals whose interior meets the (mod-1 reduced) projection.
  const auto constituents = [&](IntervalOrPoint proj) {
    std::vector<std::size_t> out;
    if (proj.is_point()) return out;
    if (proj.lo >= Rational(1)) {
      proj.lo -= Rational(1);
      proj.hi -= Rational(1);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (b[i] < proj.hi && proj.lo < b[i + 1]) out.push_back(i);
    }
    return out;
  };

  for (const AdditiveFace& af : additive.faces) {
    if (af.face.dimension != 2) continue;
    std::vector<std::size_t> all;
    for (int axis = 0; axis < 3; ++axis) {
      for (std::size_t i : constituents(af.face.projections[axis])) {
        direct[i] = true;
        all.push_back(i);
      }
    }
    for (std::size_t k = 1; k < all.size(); ++k) uf.unite(all[0], all[k]);
  }
  for (const AdditiveFace& af : additive.faces) {
    if (af.face.dimension != 1) continue;
    // Translation move when the x or y projection is a point, reflection
    // move when the x+y projection is; the two non-singleton projections
    // carry the same perturbation data.
    std::vector<std::size_t> all;
    for (int axis = 0; axis < 3; ++axis) {
      for (std::size_t i : constituents(af.face.projections[axis])) all.push_back(i);
    }
    for (std::size_t k = 1; k < all.size(); ++k) uf.unite(all[0], all[k]);
  }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);

  CoveredComponents out;
  std::vector<std::pair<std::size_t, CoveredComponent>> ordered;
  for (const auto& [root, members] : groups) {
    CoveredComponent comp;
    comp.directly_covered = true;
    for (std::size_t i : members) {
      comp.intervals.emplace_back(b[i], b[i + 1]);
      comp.covered = comp.covered || direct[i];
      comp.directly_covered = comp.directly_covered && direct[i];
    }
    if (!comp.covered) comp.directly_covered = false;
    ordered.emplace_back(members.front(), std::move(comp));
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& c) { return a.first < c.first; });
  for (auto& [key, comp] : ordered) out.components.push_back(std::move(comp));
  return out;
}

namespace {

// Realizable sign patterns of (dx, dy, dx+dy) for approach directions.
constexpr int kLimitDirections[13][2] = {
    {0, 0},  {1, 0},  {-1, 0}, {0, 1},  {0, -1}, {1, 1},   {-1, -1},
    {1, -1}, {-1, 1}, {2, -1}, {-2, 1}, {1, -2}, {-1, 2}};

Side side_of(int d) {
  if (d == 0) return Side::kValue;
  return d > 0 ? Side::kRight : Side::kLeft;
}

struct GridLayout {
  long grid_den = 0;
  std::vector<long> value_col;
  std::vector<long> right_col;  // -1 where the function is continuous
  std::vector<long> left_col;
  long columns = 0;
};

long grid_index(const Rational& x, long grid_den) {
  const Rational scaled = x.mod1() * Rational(grid_den);
  if (!scaled.is_integer()) {
    throw std::logic_error("extremality_test: point off the refinement grid");
  }
  return scaled.numerator().get_si();
}

PiecewiseFunction perturbed_function(const PiecewiseFunction& fn,
                                     const PiecewiseFunction& pert,
                                     const Rational& eps, const Rational& f) {
  const std::vector<Rational>& bk = pert.end_points();
  std::vector<LimitTriple> triples;
  triples.reserve(bk.size());
  for (const Rational& x : bk) {
    const LimitTriple a = fn.limits_at(x);
    const LimitTriple d = pert.limits_at(x);
    triples.push_back(LimitTriple{a.value + eps * d.value, a.right + eps * d.right,
                                  a.left + eps * d.left});
  }
  return PiecewiseFunction::from_breakpoints_and_limits(bk, triples, f);
}

}  // namespace

ExtremalityReport extremality_test(const PiecewiseFunction& fn, long refinement) {
  if (refinement < 1) {
    throw std::invalid_argument("extremality_test: refinement must be positive");
  }
  const MinimalityReport minimal = minimality_test(fn);
  if (!minimal.is_minimal) {
    throw std::domain_error("extremality_test: function is not minimal");
  }
  const Rational f = minimal.f_used;

  Integer q(1);
  for (const Rational& bp : fn.end_points()) q = lcm(q, bp.denominator());
  for (const LimitTriple& t : fn.limits_at_end_points()) {
    q = lcm(q, t.value.denominator());
    q = lcm(q, t.right.denominator());
    q = lcm(q, t.left.denominator());
  }
  q = lcm(q, f.denominator());
  const Integer grid_den_big = q * refinement;
  if (!grid_den_big.fits_slong_p()) {
    throw std::domain_error("extremality_test: grid denominator is not representable");
  }
  const long N = grid_den_big.get_si();

  GridLayout g;
  g.grid_den = N;
  g.value_col.assign(N, -1);
  g.right_col.assign(N, -1);
  g.left_col.assign(N, -1);
  for (long i = 0; i < N; ++i) g.value_col[i] = g.columns++;
  if (!fn.is_continuous()) {
    for (long i = 0; i < N; ++i) {
      if (!fn.limits_at(Rational(i, N)).is_continuous()) {
        g.right_col[i] = g.columns++;
        g.left_col[i] = g.columns++;
      }
    }
  }

  const auto col_for = [&](const Rational& x, Side side) -> std::size_t {
    const long i = grid_index(x, N);
    if (side == Side::kRight && g.right_col[i] >= 0) return g.right_col[i];
    if (side == Side::kLeft && g.left_col[i] >= 0) return g.left_col[i];
    return g.value_col[i];
  };

  LinearSystem sys(static_cast<std::size_t>(g.columns));
  const Rational zero(0), one(1);

  sys.add_equation({{col_for(zero, Side::kValue), Rational(1)}});
  sys.add_equation({{col_for(f, Side::kValue), Rational(1)}});

  // Anywhere the function touches 0 or 1 the perturbation must vanish,
  // or the range condition breaks for one of pi +/- eps*phi.
  for (long i = 0; i < N; ++i) {
    const Rational x(i, N);
    const LimitTriple t = fn.limits_at(x);
    const std::array<std::pair<Side, const Rational*>, 3> sides = {
        std::pair{Side::kValue, &t.value}, std::pair{Side::kRight, &t.right},
        std::pair{Side::kLeft, &t.left}};
    for (const auto& [side, value] : sides) {
      if (*value == zero || *value == one) {
        sys.add_equation({{col_for(x, side), Rational(1)}});
      }
    }
  }

  for (long i = 0; i < N; ++i) {
    const Rational x(i, N);
    const Rational y = (f - x).mod1();
    sys.add_equation({{col_for(x, Side::kValue), Rational(1)},
                      {col_for(y, Side::kValue), Rational(1)}});
    if (!fn.is_continuous()) {
      sys.add_equation({{col_for(x, Side::kRight), Rational(1)},
                        {col_for(y, Side::kLeft), Rational(1)}});
      sys.add_equation({{col_for(x, Side::kLeft), Rational(1)},
                        {col_for(y, Side::kRight), Rational(1)}});
    }
  }

  for (long i = 0; i < N; ++i) {
    for (long j = i; j < N; ++j) {
      const Rational x(i, N), y(j, N);
      const Rational z = x + y;
      if (fn.is_continuous()) {
        if (delta_pi(fn, x, y).is_zero()) {
          sys.add_equation({{col_for(x, Side::kValue), Rational(1)},
                            {col_for(y, Side::kValue), Rational(1)},
                            {col_for(z, Side::kValue), Rational(-1)}});
        }
        continue;
      }
      for (const auto& dir : kLimitDirections) {
        const Side sx = side_of(dir[0]);
        const Side sy = side_of(dir[1]);
        const Side sz = side_of(dir[0] + dir[1]);
        const Rational slack = fn.limit_value(x, sx) + fn.limit_value(y, sy) -
                               fn.limit_value(z, sz);
        if (slack.is_zero()) {
          sys.add_equation({{col_for(x, sx), Rational(1)},
                            {col_for(y, sy), Rational(1)},
                            {col_for(z, sz), Rational(-1)}});
        }
      }
    }
  }

  ExtremalityReport report;
  report.grid_denominator = N;
  report.perturbation_space_dimension = static_cast<long>(sys.nullity());
  report.is_extreme = report.perturbation_space_dimension == 0;
  report.covered = generate_covered_intervals(fn);
  report.experimental = !fn.is_continuous();
  if (report.is_extreme) return report;

  std::vector<Rational> grid_points;
  grid_points.reserve(N + 1);
  for (long i = 0; i <= N; ++i) grid_points.emplace_back(i, N);

  const auto build_perturbation = [&](std::vector<Rational> sol) {
    Rational max_abs(0);
    for (const Rational& v : sol) max_abs = std::max(max_abs, v.abs());
    int lead_sign = 0;
    for (const Rational& v : sol) {
      if (!v.is_zero()) { lead_sign = v.sign(); break; }
    }
    const Rational scale = Rational(lead_sign) / max_abs;
    for (Rational& v : sol) v *= scale;

    std::vector<LimitTriple> triples(N + 1);
    for (long i = 0; i < N; ++i) {
      const Rational v = sol[g.value_col[i]];
      const Rational r = g.right_col[i] >= 0 ? sol[g.right_col[i]] : v;
      const Rational l = g.left_col[i] >= 0 ? sol[g.left_col[i]] : v;
      triples[i] = LimitTriple{v, r, l};
    }
    triples[N] = triples[0];
    return PiecewiseFunction::from_breakpoints_and_limits(grid_points, triples);
  };

  for (std::size_t free_col : sys.free_columns()) {
    const PiecewiseFunction pert = build_perturbation(sys.nullspace_vector(free_col));
    Rational eps(1, 2);
    for (int iter = 0; iter < 20; ++iter) {
      const PiecewiseFunction plus = perturbed_function(fn, pert, eps, f);
      const PiecewiseFunction minus = perturbed_function(fn, pert, -eps, f);
      if (minimality_test(plus).is_minimal && minimality_test(minus).is_minimal) {
        report.perturbation = pert;
        report.epsilon = eps;
        return report;
      }
      eps /= Rational(2);
    }
    if (!report.perturbation) report.perturbation = pert;  // direction only
  }
  return report;
}

}  // namespace cutgen
