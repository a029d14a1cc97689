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

#include "cutgen/render.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cutgen/analysis.hpp"
#include "cutgen/complex.hpp"

namespace cutgen {

namespace {

const char* const kBlue = "#0000d0";
const char* const kGreen = "#00a000";
const char* const kRed = "#d00000";
const char* const kGray = "#808080";
const char* const kGridGray = "#c8c8c8";
const char* const kAxisGray = "#404040";

const char* const kSlopePalette[] = {"#0000d0", "#d07000", "#7000d0", "#00a0a0",
                                     "#a06000", "#d000d0", "#606060", "#008000"};
constexpr int kSlopePaletteSize = 8;

constexpr int kPad = 12;
constexpr int kStrip = 56;    // height of the border function strips
constexpr int kAxisGap = 16;  // distance from the square to the strips

struct Layout {
  int precision;
  Rational ox, oy, side;

  Rational px(const Rational& x) const { return ox + x * side; }
  Rational py(const Rational& y) const { return oy + (Rational(1) - y) * side; }
  // Border strips: function value 0 sits on the inner edge.
  Rational top_strip(const Rational& v) const {
    return oy - Rational(kAxisGap) - v * Rational(kStrip);
  }
  Rational left_strip(const Rational& v) const {
    return ox - Rational(kAxisGap) - v * Rational(kStrip);
  }
};

std::string interval_label(const IntervalOrPoint& e) {
  return "[" + e.lo.to_string() + "," + e.hi.to_string() + "]";
}

std::string face_label(const Face& face) {
  return interval_label(face.triple[kAxisX]) + "x" + interval_label(face.triple[kAxisY]) +
         "x" + interval_label(face.triple[kAxisSum]);
}

std::string point_label(const Point& p) {
  return p.x.to_string() + "," + p.y.to_string();
}

class Svg {
 public:
  Svg(int width, int height, int precision) : precision_(precision) {
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
         << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
         << height << "\">\n";
    out_ << "<rect width=\"" << width << "\" height=\"" << height
         << "\" fill=\"#ffffff\"/>\n";
  }

  std::string num(const Rational& v) const { return format_decimal(v, precision_); }

  void line(const Rational& x1, const Rational& y1, const Rational& x2,
            const Rational& y2, const std::string& stroke, const std::string& width,
            const std::string& attrs) {
    out_ << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
         << "\" y2=\"" << num(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\""
         << width << "\"" << attrs << "/>\n";
  }

  void circle(const Rational& cx, const Rational& cy, const std::string& r,
              const std::string& fill, const std::string& stroke,
              const std::string& attrs) {
    out_ << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << r
         << "\" fill=\"" << fill << "\"";
    if (!stroke.empty()) out_ << " stroke=\"" << stroke << "\"";
    out_ << attrs << "/>\n";
  }

  void rect(const Rational& x, const Rational& y, const Rational& w, const Rational& h,
            const std::string& fill, const std::string& attrs) {
    out_ << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(w)
         << "\" height=\"" << num(h) << "\" fill=\"" << fill << "\"" << attrs << "/>\n";
  }

  void polygon(const std::vector<std::pair<Rational, Rational>>& pts,
               const std::string& fill, const std::string& extra,
               const std::string& attrs) {
    out_ << "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out_ << " ";
      out_ << num(pts[i].first) << "," << num(pts[i].second);
    }
    out_ << "\" fill=\"" << fill << "\"" << extra << attrs << "/>\n";
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  int precision_;
  std::ostringstream out_;
};

std::map<Rational, std::string> slope_colors(const PiecewiseFunction& fn,
                                             bool colored) {
  std::map<Rational, std::string> colors;
  if (!colored) {
    for (std::size_t i = 0; i < fn.piece_count(); ++i) colors[fn.slope_of_piece(i)] = kBlue;
    return colors;
  }
  std::set<Rational> distinct;
  for (std::size_t i = 0; i < fn.piece_count(); ++i) distinct.insert(fn.slope_of_piece(i));
  int index = 0;
  for (const Rational& s : distinct) {
    colors[s] = kSlopePalette[index % kSlopePaletteSize];
    ++index;
  }
  return colors;
}

// Convex polygon vertices in counterclockwise order around the centroid;
// the comparator is exact (half-plane split plus cross product).
std::vector<Point> ordered_polygon(std::vector<Point> pts) {
  Rational cx(0), cy(0);
  for (const Point& p : pts) { cx += p.x; cy += p.y; }
  const Rational count(static_cast<long>(pts.size()));
  cx /= count;
  cy /= count;
  const auto half = [](const Rational& dx, const Rational& dy) {
    return (dy > Rational(0) || (dy.is_zero() && dx > Rational(0))) ? 0 : 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
    const Rational ax = a.x - cx, ay = a.y - cy;
    const Rational bx = b.x - cx, by = b.y - cy;
    const int ha = half(ax, ay), hb = half(bx, by);
    if (ha != hb) return ha < hb;
    return (ax * by - ay * bx).sign() > 0;
  });
  return pts;
}

Point step_towards(const Point& from, const Point& to, const Rational& radius) {
  const Rational dx = to.x - from.x;
  const Rational dy = to.y - from.y;
  const Rational m = std::max(dx.abs(), dy.abs());
  return Point{from.x + dx / m * radius, from.y + dy / m * radius};
}

// Function graph drawn through arbitrary coordinate maps, used for the
// standalone plot and the border strips of the 2d diagrams.
template <typename MapX, typename MapY>
void draw_function_curve(Svg& svg, const PiecewiseFunction& fn, MapX map_x, MapY map_y,
                         const std::map<Rational, std::string>& colors,
                         const std::string& kind_prefix, const char* marker_radius,
                         const char* hollow_radius) {
  const std::vector<Rational>& b = fn.end_points();
  const std::vector<LimitTriple>& limits = fn.limits_at_end_points();
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    const Rational slope = fn.slope_of_piece(i);
    svg.line(map_x(b[i]), map_y(limits[i].right), map_x(b[i + 1]), map_y(limits[i + 1].left),
             colors.at(slope), "2",
             " data-kind=\"" + kind_prefix + "piece\" data-slope=\"" + slope.to_string() +
                 "\"");
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    const LimitTriple& t = limits[i];
    const std::string at = " data-x=\"" + b[i].to_string() + "\"";
    if (i + 1 < b.size() && t.right != t.value) {
      svg.circle(map_x(b[i]), map_y(t.right), hollow_radius, "#ffffff", kBlue,
                 " data-kind=\"" + kind_prefix + "limit-marker\" data-side=\"right\"" + at);
    }
    if (i > 0 && t.left != t.value) {
      svg.circle(map_x(b[i]), map_y(t.left), hollow_radius, "#ffffff", kBlue,
                 " data-kind=\"" + kind_prefix + "limit-marker\" data-side=\"left\"" + at);
    }
    svg.circle(map_x(b[i]), map_y(t.value), marker_radius, kBlue, "",
               " data-kind=\"" + kind_prefix + "value-marker\"" + at);
  }
}

Layout make_layout(const DiagramSpec& spec) {
  Layout layout;
  layout.precision = spec.precision;
  const long margin = kPad + kStrip + kAxisGap;
  const long side = std::min(spec.width, spec.height) - 2 * margin;
  if (side <= 0) throw std::invalid_argument("render: canvas too small");
  layout.ox = Rational(margin);
  layout.oy = Rational(margin);
  layout.side = Rational(side);
  return layout;
}

void draw_frame_and_grid(Svg& svg, const Layout& lay, const PiecewiseFunction& fn) {
  const std::vector<Rational>& b = fn.end_points();
  const Rational zero(0), one(1), two(2);
  for (const Rational& x : b) {
    svg.line(lay.px(x), lay.py(zero), lay.px(x), lay.py(one), kGridGray, "1",
             " data-kind=\"grid\" data-axis=\"x\"");
  }
  for (const Rational& y : b) {
    svg.line(lay.px(zero), lay.py(y), lay.px(one), lay.py(y), kGridGray, "1",
             " data-kind=\"grid\" data-axis=\"y\"");
  }
  std::set<Rational> diagonals;
  for (long t = 0; t <= 1; ++t) {
    for (const Rational& z : b) diagonals.insert(z + Rational(t));
  }
  for (const Rational& z : diagonals) {
    if (z <= zero || z >= two) continue;
    const Rational xlo = std::max(zero, z - one);
    const Rational xhi = std::min(one, z);
    if (!(xlo < xhi)) continue;
    svg.line(lay.px(xlo), lay.py(z - xlo), lay.px(xhi), lay.py(z - xhi), kGridGray, "1",
             " data-kind=\"grid\" data-axis=\"sum\"");
  }
  // The (x+y)-axis traces the bottom border and then the right border.
  const Rational off(10);
  svg.line(lay.px(zero), lay.py(zero) + off, lay.px(one), lay.py(zero) + off, kAxisGray,
           "1", " data-kind=\"axis\" data-axis=\"sum-low\"");
  svg.line(lay.px(one) + off, lay.py(zero), lay.px(one) + off, lay.py(one), kAxisGray,
           "1", " data-kind=\"axis\" data-axis=\"sum-high\"");
}

void draw_border_functions(Svg& svg, const Layout& lay, const PiecewiseFunction& fn,
                           bool colored) {
  const std::map<Rational, std::string> colors = slope_colors(fn, colored);
  draw_function_curve(
      svg, fn, [&](const Rational& x) { return lay.px(x); },
      [&](const Rational& v) { return lay.top_strip(v); }, colors, "border-x-", "3", "2");
  draw_function_curve(
      svg, fn, [&](const Rational& y) { return lay.py(y); },
      [&](const Rational& v) { return lay.left_strip(v); }, colors, "border-y-", "3",
      "2");
}

enum class SignClass { kNegative, kZero, kPositive };

SignClass classify(const Rational& slack) {
  const int s = slack.sign();
  if (s < 0) return SignClass::kNegative;
  if (s == 0) return SignClass::kZero;
  return SignClass::kPositive;
}

}  // namespace

std::string format_decimal(const Rational& v, int digits) {
  Integer num = v.numerator();
  const Integer den = v.denominator();
  const bool negative = num < 0;
  if (negative) num = -num;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Integer scaled = num * scale;
  Integer quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  const Integer twice = rem * 2;
  const int c = cmp(twice, den);
  if (c > 0 || (c == 0 && mpz_odd_p(quot.get_mpz_t()) != 0)) quot += 1;
  const Integer ipart = quot / scale;
  std::string out = ipart.get_str();
  if (digits > 0) {
    const Integer frac = quot % scale;
    std::string fraction = frac.get_str();
    fraction.insert(0, static_cast<std::size_t>(digits) - fraction.size(), '0');
    out += "." + fraction;
  }
  if (negative && quot != 0) out.insert(0, "-");
  return out;
}

std::string plot_function(const PiecewiseFunction& fn, const DiagramSpec& spec) {
  Svg svg(spec.width, spec.height, spec.precision);
  const long margin = 40;
  const Rational w(spec.width - 2 * margin);
  const Rational h(spec.height - 2 * margin);
  const Rational x0(margin), y0(spec.height - margin);
  const auto map_x = [&](const Rational& x) { return x0 + x * w; };
  const auto map_y = [&](const Rational& v) { return y0 - v * h; };

  svg.line(map_x(Rational(0)), map_y(Rational(0)), map_x(Rational(1)), map_y(Rational(0)),
           kAxisGray, "1", " data-kind=\"axis\" data-axis=\"x\"");
  svg.line(map_x(Rational(0)), map_y(Rational(0)), map_x(Rational(0)), map_y(Rational(1)),
           kAxisGray, "1", " data-kind=\"axis\" data-axis=\"y\"");

  draw_function_curve(svg, fn, map_x, map_y, slope_colors(fn, spec.colored_slopes), "",
                      "4", "3");
  return svg.finish();
}

std::string plot_2d_diagram_with_cones(const PiecewiseFunction& fn,
                                       const DiagramSpec& spec) {
  Svg svg(spec.width, spec.height, spec.precision);
  const Layout lay = make_layout(spec);
  draw_frame_and_grid(svg, lay, fn);
  draw_border_functions(svg, lay, fn, spec.colored_slopes);

  const Rational cone_radius(1, 20);
  const std::vector<Point> verts = vertices_of_complex(fn);

  if (!fn.is_continuous()) {
    for (const Point& v : verts) {
      for (const VertexIncidence& inc : vertex_incidences(fn, v)) {
        if (inc.face.dimension == 0) continue;
        const SignClass cls = classify(delta_pi_limit(fn, inc.face, inc.embedded));
        if (cls == SignClass::kPositive) continue;
        const char* color = cls == SignClass::kZero ? kGreen : kRed;
        const char* sign = cls == SignClass::kZero ? "zero" : "negative";
        const std::string attrs = " data-vertex=\"" + point_label(v) + "\" data-face=\"" +
                                  face_label(inc.face) + "\" data-sign=\"" + sign + "\"";
        if (inc.face.dimension == 1) {
          const Point& other = inc.face.vertices[inc.face.vertices.front() == inc.embedded ? 1 : 0];
          const Point tip = step_towards(inc.embedded, other, cone_radius);
          svg.line(lay.px(inc.embedded.x), lay.py(inc.embedded.y), lay.px(tip.x),
                   lay.py(tip.y), color, "2.5", " data-kind=\"ray\"" + attrs);
        } else {
          const std::vector<Point> ring = ordered_polygon(inc.face.vertices);
          std::size_t at = 0;
          while (ring[at] != inc.embedded) ++at;
          const Point& before = ring[(at + ring.size() - 1) % ring.size()];
          const Point& after = ring[(at + 1) % ring.size()];
          const Point tip1 = step_towards(inc.embedded, before, cone_radius);
          const Point tip2 = step_towards(inc.embedded, after, cone_radius);
          svg.polygon({{lay.px(inc.embedded.x), lay.py(inc.embedded.y)},
                       {lay.px(tip1.x), lay.py(tip1.y)},
                       {lay.px(tip2.x), lay.py(tip2.y)}},
                      color, "", " data-kind=\"cone\"" + attrs);
        }
      }
    }
  }

  for (const Point& v : verts) {
    const SignClass cls = classify(delta_pi(fn, v.x, v.y));
    if (cls == SignClass::kPositive) continue;
    const char* color = cls == SignClass::kZero ? kGreen : kRed;
    const char* sign = cls == SignClass::kZero ? "zero" : "negative";
    svg.circle(lay.px(v.x), lay.py(v.y), "4", color, "",
               " data-kind=\"vertex\" data-vertex=\"" + point_label(v) +
                   "\" data-sign=\"" + std::string(sign) + "\"");
  }
  return svg.finish();
}

std::string plot_2d_diagram(const PiecewiseFunction& fn, const DiagramSpec& spec) {
  if (!subadditivity_test(fn).subadditive) {
    throw std::domain_error("plot_2d_diagram: function is not subadditive");
  }
  Svg svg(spec.width, spec.height, spec.precision);
  const Layout lay = make_layout(spec);
  const AdditiveFaceSet additive = generate_maximal_additive_faces(fn);
  const Rational zero(0), one(1);

  // Gray shadows of the 2-dimensional faces on the three axes.
  const Rational thick(8), gap(4), outer(12);
  for (const AdditiveFace& af : additive.faces) {
    if (af.face.dimension != 2) continue;
    const std::string source = " data-face=\"" + face_label(af.face) + "\"";
    const IntervalOrPoint& px = af.face.projections[kAxisX];
    svg.rect(lay.px(px.lo), lay.oy - outer, (px.hi - px.lo) * lay.side, thick, kGray,
             " data-kind=\"shadow\" data-axis=\"x\" data-range=\"" + interval_label(px) +
                 "\"" + source);
    const IntervalOrPoint& py = af.face.projections[kAxisY];
    svg.rect(lay.ox - outer, lay.py(py.hi), thick, (py.hi - py.lo) * lay.side, kGray,
             " data-kind=\"shadow\" data-axis=\"y\" data-range=\"" + interval_label(py) +
                 "\"" + source);
    const IntervalOrPoint& pz = af.face.projections[kAxisSum];
    const std::string range_sum =
        " data-kind=\"shadow\" data-axis=\"sum\" data-range=\"" + interval_label(pz) +
        "\"" + source;
    if (pz.hi <= one) {
      svg.rect(lay.px(pz.lo), lay.py(zero) + gap, (pz.hi - pz.lo) * lay.side, thick,
               kGray, range_sum);
    } else {
      svg.rect(lay.px(one) + gap, lay.py(pz.hi - one), thick,
               (pz.hi - pz.lo) * lay.side, kGray, range_sum);
    }
  }

  draw_frame_and_grid(svg, lay, fn);

  for (const AdditiveFace& af : additive.faces) {
    const std::string attrs = " data-face=\"" + face_label(af.face) + "\" data-sign=\"zero\"";
    if (af.face.dimension == 2) {
      std::vector<std::pair<Rational, Rational>> pts;
      for (const Point& p : ordered_polygon(af.face.vertices)) {
        pts.emplace_back(lay.px(p.x), lay.py(p.y));
      }
      svg.polygon(pts, kGreen, " fill-opacity=\"0.4\"", " data-kind=\"face\"" + attrs);
    } else if (af.face.dimension == 1) {
      const Point& a = af.face.vertices[0];
      const Point& b = af.face.vertices[1];
      svg.line(lay.px(a.x), lay.py(a.y), lay.px(b.x), lay.py(b.y), kGreen, "3",
               " data-kind=\"edge\"" + attrs);
    } else {
      const Point& p = af.face.vertices[0];
      svg.circle(lay.px(p.x), lay.py(p.y), "4", kGreen, "",
                 " data-kind=\"vertex\" data-vertex=\"" + point_label(p) + "\"" + attrs);
    }
  }

  draw_border_functions(svg, lay, fn, spec.colored_slopes);
  return svg.finish();
}

}  // namespace cutgen
