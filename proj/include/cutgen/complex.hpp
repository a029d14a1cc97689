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

#ifndef CUTGEN_COMPLEX_HPP_
#define CUTGEN_COMPLEX_HPP_

#include <array>
#include <compare>
#include <optional>
#include <vector>

#include "cutgen/piecewise.hpp"
#include "cutgen/rational.hpp"

namespace cutgen {

struct Point {
  Rational x;
  Rational y;

  Rational sum() const { return x + y; }
  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point&, const Point&) = default;
};

// A closed interval [lo, hi] or a single point (lo == hi).
struct IntervalOrPoint {
  Rational lo;
  Rational hi;

  static IntervalOrPoint point(Rational v) { return {v, v}; }
  static IntervalOrPoint interval(Rational lo, Rational hi);

  bool is_point() const { return lo == hi; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }

  friend bool operator==(const IntervalOrPoint&, const IntervalOrPoint&) = default;
  friend std::strong_ordering operator<=>(const IntervalOrPoint&,
                                          const IntervalOrPoint&) = default;
};

// Index of the three linear functionals x, y and x+y used throughout:
// triple[0]/projections[0] constrain x, [1] constrain y, [2] constrain x+y.
inline constexpr int kAxisX = 0;
inline constexpr int kAxisY = 1;
inline constexpr int kAxisSum = 2;

// A face F(I, J, K) = { (x, y) : x in I, y in J, x+y in K } of the
// two-dimensional complex, represented by its defining triple, its vertex
// list, and the projections (the exact ranges of x, y and x+y over the
// face).  The projections can be strictly smaller than the triple.
struct Face {
  std::array<IntervalOrPoint, 3> triple;
  std::vector<Point> vertices;  // sorted lexicographically, exact, deduped
  std::array<IntervalOrPoint, 3> projections;
  int dimension = 0;  // affine dimension of the vertex set

  bool contains(const Point& p) const {
    return triple[kAxisX].contains(p.x) && triple[kAxisY].contains(p.y) &&
           triple[kAxisSum].contains(p.sum());
  }

  // Projection triple; identifies a face of the complex uniquely.
  std::array<IntervalOrPoint, 3> canonical_key() const { return projections; }
};

bool face_key_less(const Face& a, const Face& b);
bool same_face(const Face& a, const Face& b);

// The subadditivity slack at one vertex, approached from within one face.
struct VertexSign {
  Point vertex;
  Face face;
  Rational slack;
};

// pi(x) + pi(y) - pi(x+y), all evaluations periodic mod 1.
Rational delta_pi(const PiecewiseFunction& fn, const Rational& x, const Rational& y);

struct FaceConstruction {
  std::optional<Face> face;  // empty when the triple is infeasible
  std::vector<Point> rejected;  // infeasible basic solutions, sorted
};

// Builds F(I, J, K) by listing the basic solutions (pairs of the defining
// constraints fixed to endpoints) and filtering the feasible ones.
FaceConstruction face_from_triple_detailed(const IntervalOrPoint& ix,
                                           const IntervalOrPoint& iy,
                                           const IntervalOrPoint& iz);
std::optional<Face> face_from_triple(const IntervalOrPoint& ix,
                                     const IntervalOrPoint& iy,
                                     const IntervalOrPoint& iz);

// One-dimensional complex elements of fn restricted to [0, 1]: the
// breakpoint singletons {x_0}, ..., {x_{n-1}} (the singleton {1} is the
// periodic image of {0}) and the closed intervals between consecutive
// breakpoints.
std::vector<IntervalOrPoint> complex_elements(const PiecewiseFunction& fn);

// Elements shifted by t in {0, 1}; the candidates for the x+y constraint,
// covering [0, 2].
std::vector<IntervalOrPoint> shifted_complex_elements(const PiecewiseFunction& fn);

// All nonempty faces F(I, J, K), I and J over complex_elements, K over
// shifted_complex_elements, deduplicated by projection triple and sorted.
// Returned faces carry their projection triple as defining triple.
std::vector<Face> enumerate_faces(const PiecewiseFunction& fn);

// The 0-dimensional faces of the complex inside [0,1)^2: intersections of
// the vertical, horizontal and diagonal grid lines.
std::vector<Point> vertices_of_complex(const PiecewiseFunction& fn);

// Limit of delta_pi at a vertex of `face`, approached from the relative
// interior of `face`.  The approach side of each functional is read off
// the projections: a singleton projection pins the functional (stored
// value), the left endpoint is approached from the right, the right
// endpoint from the left.  Throws if `vertex` is not in face.vertices.
Rational delta_pi_limit(const PiecewiseFunction& fn, const Face& face,
                        const Point& vertex);

// A face of the complex together with the representative of `vertex`
// (shifted by integers) that lies in face.vertices.
struct VertexIncidence {
  Face face;
  Point embedded;
};

// All cones at a vertex of the complex: every 1- and 2-dimensional face
// incident to the vertex modulo Z^2 (one incidence per embedding), plus
// the vertex's own 0-dimensional face.  Throws if the point is not a
// vertex of the complex.
std::vector<VertexIncidence> vertex_incidences(const PiecewiseFunction& fn,
                                               const Point& vertex);

// The faces of vertex_incidences, deduplicated by face identity.
std::vector<Face> faces_containing_vertex(const PiecewiseFunction& fn,
                                          const Point& vertex);

}  // namespace cutgen

#endif  // CUTGEN_COMPLEX_HPP_
