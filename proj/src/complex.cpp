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

#include "cutgen/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace cutgen {

namespace {

std::vector<Rational> ends(const IntervalOrPoint& e) {
  if (e.is_point()) return {e.lo};
  return {e.lo, e.hi};
}

int affine_dimension(const std::vector<Point>& pts) {
  if (pts.size() <= 1) return 0;
  const Point& origin = pts.front();
  const Rational dx = pts[1].x - origin.x;
  const Rational dy = pts[1].y - origin.y;
  for (std::size_t i = 2; i < pts.size(); ++i) {
    const Rational cross =
        dx * (pts[i].y - origin.y) - dy * (pts[i].x - origin.x);
    if (!cross.is_zero()) return 2;
  }
  return 1;
}

// Elements of the 1-dimensional complex containing coordinate c in [0, 1].
// The singleton {1} is excluded (it is the periodic image of {0}).
std::vector<IntervalOrPoint> elements_at(const std::vector<Rational>& bkpt,
                                         const Rational& c) {
  std::vector<IntervalOrPoint> out;
  const auto it = std::lower_bound(bkpt.begin(), bkpt.end(), c);
  const std::size_t i = static_cast<std::size_t>(it - bkpt.begin());
  if (i < bkpt.size() && bkpt[i] == c) {
    if (i + 1 < bkpt.size()) out.push_back(IntervalOrPoint::point(c));
    if (i > 0) out.push_back(IntervalOrPoint{bkpt[i - 1], bkpt[i]});
    if (i + 1 < bkpt.size()) out.push_back(IntervalOrPoint{bkpt[i], bkpt[i + 1]});
  } else {
    out.push_back(IntervalOrPoint{bkpt[i - 1], bkpt[i]});
  }
  return out;
}

// Shifted elements containing s in [0, 2].
std::vector<IntervalOrPoint> shifted_elements_at(const std::vector<Rational>& bkpt,
                                                 const Rational& s) {
  std::vector<IntervalOrPoint> out;
  for (long t = 0; t <= 1; ++t) {
    const Rational base = s - Rational(t);
    if (base < Rational(0) || base > Rational(1)) continue;
    for (const IntervalOrPoint& e : elements_at(bkpt, base)) {
      out.push_back(IntervalOrPoint{e.lo + Rational(t), e.hi + Rational(t)});
    }
  }
  return out;
}

bool is_breakpoint(const std::vector<Rational>& bkpt, const Rational& c) {
  return std::binary_search(bkpt.begin(), bkpt.end(), c);
}

Face canonicalized(Face f) {
  f.triple = f.projections;
  return f;
}

}  // namespace

IntervalOrPoint IntervalOrPoint::interval(Rational lo, Rational hi) {
  if (hi < lo) throw std::invalid_argument("IntervalOrPoint: hi < lo");
  return IntervalOrPoint{std::move(lo), std::move(hi)};
}

bool face_key_less(const Face& a, const Face& b) {
  return a.canonical_key() < b.canonical_key();
}

bool same_face(const Face& a, const Face& b) {
  return a.canonical_key() == b.canonical_key();
}

Rational delta_pi(const PiecewiseFunction& fn, const Rational& x, const Rational& y) {
  return fn(x) + fn(y) - fn(x + y);
}

FaceConstruction face_from_triple_detailed(const IntervalOrPoint& ix,
                                           const IntervalOrPoint& iy,
                                           const IntervalOrPoint& iz) {
  std::set<Point> candidates;
  for (const Rational& x : ends(ix)) {
    for (const Rational& y : ends(iy)) candidates.insert(Point{x, y});
  }
  for (const Rational& x : ends(ix)) {
    for (const Rational& z : ends(iz)) candidates.insert(Point{x, z - x});
  }
  for (const Rational& y : ends(iy)) {
    for (const Rational& z : ends(iz)) candidates.insert(Point{z - y, y});
  }

  FaceConstruction result;
  std::vector<Point> kept;
  for (const Point& p : candidates) {
    const bool feasible =
        ix.contains(p.x) && iy.contains(p.y) && iz.contains(p.sum());
    if (feasible) {
      kept.push_back(p);
    } else {
      result.rejected.push_back(p);
    }
  }
  if (kept.empty()) return result;

  Face face;
  face.triple = {ix, iy, iz};
  face.vertices = std::move(kept);
  Rational xmin = face.vertices.front().x, xmax = xmin;
  Rational ymin = face.vertices.front().y, ymax = ymin;
  Rational zmin = face.vertices.front().sum(), zmax = zmin;
  for (const Point& p : face.vertices) {
    xmin = std::min(xmin, p.x); xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y); ymax = std::max(ymax, p.y);
    const Rational s = p.sum();
    zmin = std::min(zmin, s); zmax = std::max(zmax, s);
  }
  face.projections = {IntervalOrPoint{xmin, xmax}, IntervalOrPoint{ymin, ymax},
                      IntervalOrPoint{zmin, zmax}};
  face.dimension = affine_dimension(face.vertices);
  result.face = std::move(face);
  return result;
}

std::optional<Face> face_from_triple(const IntervalOrPoint& ix,
                                     const IntervalOrPoint& iy,
                                     const IntervalOrPoint& iz) {
  return face_from_triple_detailed(ix, iy, iz).face;
}

std::vector<IntervalOrPoint> complex_elements(const PiecewiseFunction& fn) {
  const std::vector<Rational>& b = fn.end_points();
  const std::size_t n = b.size() - 1;
  std::vector<IntervalOrPoint> out;
  out.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(IntervalOrPoint::point(b[i]));
  for (std::size_t i = 0; i < n; ++i) out.push_back(IntervalOrPoint{b[i], b[i + 1]});
  return out;
}

std::vector<IntervalOrPoint> shifted_complex_elements(const PiecewiseFunction& fn) {
  const std::vector<Rational>& b = fn.end_points();
  const std::size_t n = b.size() - 1;
  std::vector<IntervalOrPoint> out;
  out.reserve(4 * n);
  for (long t = 0; t <= 1; ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(IntervalOrPoint::point(b[i] + Rational(t)));
    }
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(IntervalOrPoint{b[i] + Rational(t), b[i + 1] + Rational(t)});
    }
  }
  return out;
}

std::vector<Face> enumerate_faces(const PiecewiseFunction& fn) {
  const std::vector<IntervalOrPoint> els = complex_elements(fn);
  const std::vector<IntervalOrPoint> els_sum = shifted_complex_elements(fn);
  std::map<std::array<IntervalOrPoint, 3>, Face> seen;
  for (const IntervalOrPoint& ix : els) {
    for (const IntervalOrPoint& iy : els) {
      for (const IntervalOrPoint& iz : els_sum) {
        std::optional<Face> face = face_from_triple(ix, iy, iz);
        if (!face) continue;
        Face canon = canonicalized(*std::move(face));
        std::array<IntervalOrPoint, 3> key = canon.canonical_key();
        seen.emplace(std::move(key), std::move(canon));
      }
    }
  }
  std::vector<Face> out;
  out.reserve(seen.size());
  for (auto& [key, face] : seen) out.push_back(std::move(face));
  return out;
}

std::vector<Point> vertices_of_complex(const PiecewiseFunction& fn) {
  const std::vector<Rational>& b = fn.end_points();
  const std::size_t n = b.size() - 1;
  std::set<Point> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.insert(Point{b[i], b[j]});
      out.insert(Point{b[i], (b[j] - b[i]).mod1()});  // x = b_i, x+y = b_j
      out.insert(Point{(b[j] - b[i]).mod1(), b[i]});  // y = b_i, x+y = b_j
    }
  }
  return std::vector<Point>(out.begin(), out.end());
}

Rational delta_pi_limit(const PiecewiseFunction& fn, const Face& face,
                        const Point& vertex) {
  if (!std::binary_search(face.vertices.begin(), face.vertices.end(), vertex)) {
    throw std::invalid_argument("delta_pi_limit: point is not a vertex of the face");
  }
  const auto side_for = [](const Rational& v, const IntervalOrPoint& proj) {
    if (proj.is_point()) return Side::kValue;
    if (v == proj.lo) return Side::kRight;
    if (v == proj.hi) return Side::kLeft;
    return Side::kValue;  // interior of the projection: no breakpoint there
  };
  const Rational z = vertex.sum();
  const Side sx = side_for(vertex.x, face.projections[kAxisX]);
  const Side sy = side_for(vertex.y, face.projections[kAxisY]);
  const Side sz = side_for(z, face.projections[kAxisSum]);
  return fn.limit_value(vertex.x, sx) + fn.limit_value(vertex.y, sy) -
         fn.limit_value(z, sz);
}

std::vector<VertexIncidence> vertex_incidences(const PiecewiseFunction& fn,
                                               const Point& vertex) {
  const std::vector<Rational>& b = fn.end_points();
  const Point p{vertex.x.mod1(), vertex.y.mod1()};
  const int families = (is_breakpoint(b, p.x) ? 1 : 0) +
                       (is_breakpoint(b, p.y) ? 1 : 0) +
                       (is_breakpoint(b, p.sum().mod1()) ? 1 : 0);
  if (families < 2) {
    throw std::invalid_argument("vertex_incidences: point is not a vertex of the complex");
  }

  std::map<std::pair<std::array<IntervalOrPoint, 3>, Point>, VertexIncidence> seen;
  for (long a = 0; a <= 1; ++a) {
    for (long c = 0; c <= 1; ++c) {
      const Point w{p.x + Rational(a), p.y + Rational(c)};
      if (w.x > Rational(1) || w.y > Rational(1)) continue;
      for (const IntervalOrPoint& ix : elements_at(b, w.x)) {
        for (const IntervalOrPoint& iy : elements_at(b, w.y)) {
          for (const IntervalOrPoint& iz : shifted_elements_at(b, w.sum())) {
            std::optional<Face> face = face_from_triple(ix, iy, iz);
            if (!face) continue;  // cannot happen: w satisfies all three
            Face canon = canonicalized(*std::move(face));
            if (canon.dimension == 0) {
              // Keep only the vertex's own 0-face; images under the shift
              // are the same face of the periodic complex.
              if (a != 0 || c != 0) continue;
            }
            if (!std::binary_search(canon.vertices.begin(), canon.vertices.end(), w)) {
              continue;  // w interior to the face: not a cone apex
            }
            std::pair<std::array<IntervalOrPoint, 3>, Point> key{
                canon.canonical_key(), w};
            seen.emplace(std::move(key), VertexIncidence{std::move(canon), w});
          }
        }
      }
    }
  }
  std::vector<VertexIncidence> out;
  out.reserve(seen.size());
  for (auto& [key, inc] : seen) out.push_back(std::move(inc));
  return out;
}

std::vector<Face> faces_containing_vertex(const PiecewiseFunction& fn,
                                          const Point& vertex) {
  std::map<std::array<IntervalOrPoint, 3>, Face> seen;
  for (VertexIncidence& inc : vertex_incidences(fn, vertex)) {
    std::array<IntervalOrPoint, 3> key = inc.face.canonical_key();
    seen.emplace(std::move(key), std::move(inc.face));
  }
  std::vector<Face> out;
  out.reserve(seen.size());
  for (auto& [key, face] : seen) out.push_back(std::move(face));
  return out;
}

}  // namespace cutgen
