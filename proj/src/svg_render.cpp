#include "ccm/svg_render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

#include "ccm/planar.hpp"

namespace ccm::io {

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

struct Canvas {
  std::ostringstream body;
  Vec2 lo{0, 0};
  Vec2 hi{0, 0};
  bool first = true;

  // SVG y grows downward; flip so the figure reads like the plane.
  static Vec2 flip(const Vec2& p) { return Vec2(p.x(), -p.y()); }

  void include(const Vec2& p) {
    const Vec2 q = flip(p);
    if (first) {
      lo = hi = q;
      first = false;
    } else {
      lo = lo.cwiseMin(q);
      hi = hi.cwiseMax(q);
    }
  }

  void path(const std::vector<Vec2>& pts, const char* cls,
            const char* stroke, double width, bool closed) {
    body << "<path class=\"" << cls << "\" fill=\"none\" stroke=\"" << stroke
         << "\" stroke-width=\"" << num(width) << "\" d=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
      const Vec2 q = flip(pts[i]);
      body << (i == 0 ? "M" : "L") << num(q.x()) << " " << num(q.y());
    }
    if (closed) body << "Z";
    body << "\"/>\n";
  }

  void line(const Vec2& a, const Vec2& b, const char* cls,
            const char* stroke, double width) {
    const Vec2 qa = flip(a);
    const Vec2 qb = flip(b);
    body << "<line class=\"" << cls << "\" stroke=\"" << stroke
         << "\" stroke-width=\"" << num(width) << "\" x1=\"" << num(qa.x())
         << "\" y1=\"" << num(qa.y()) << "\" x2=\"" << num(qb.x())
         << "\" y2=\"" << num(qb.y()) << "\"/>\n";
  }

  void dot(const Vec2& p, const char* cls, const char* fill, double radius) {
    const Vec2 q = flip(p);
    body << "<circle class=\"" << cls << "\" fill=\"" << fill << "\" cx=\""
         << num(q.x()) << "\" cy=\"" << num(q.y()) << "\" r=\""
         << num(radius) << "\"/>\n";
  }
};

}  // namespace

std::string render_svg(const GeometryDocument& doc,
                       const RenderOptions& options) {
  if (doc.kind != GeometryKind::Polygon) {
    throw Error(ErrorCode::UnsupportedKind,
                "only the polygon kind can be rendered");
  }
  std::vector<Vec2> verts;
  for (const std::vector<double>& v : doc.vertices) {
    verts.emplace_back(v[0], v[1]);
  }
  const OrientedPolygon p(verts);
  const Tolerance tol =
      p.default_tolerance(options.eps_rel.value_or(kDefaultEpsRel));
  const double unit = p.diameter();
  const double stroke_w = 0.006 * unit;
  const double marker_r = 0.012 * unit;

  Canvas canvas;
  for (const Vec2& v : verts) canvas.include(v);

  if (options.fan) {
    const Vec2 o = options.base_point
                       ? *options.base_point
                       : pick_admissible_base_point(p, tol);
    canvas.include(o);
    std::vector<Vec2> centers;
    for (int i = 0; i < p.size(); ++i) {
      const Triangle tri{o, p.vertex(i), p.vertex(i + 1)};
      canvas.path({o, p.vertex(i), p.vertex(i + 1)}, "fan", "#9ca3af",
                  0.5 * stroke_w, true);
      if (classify_degeneracy(tri, tol) == DegeneracyClass::NonDegenerate) {
        centers.push_back(circumcenter(tri, tol));
        canvas.include(centers.back());
      }
    }
    for (const Vec2& c : centers) {
      canvas.dot(c, "fan-center", "#f59e0b", 0.75 * marker_r);
    }
    canvas.dot(o, "base-point", "#6b7280", 0.75 * marker_r);
  }

  canvas.path(verts, "outline", "#1f2937", stroke_w, true);

  if (options.euler) {
    const EulerLine line = euler_line(p, tol);
    canvas.include(line.ccm);
    canvas.include(line.cm);
    if (!line.degenerate) {
      canvas.line(line.ccm, line.cm, "euler", "#2563eb", 0.75 * stroke_w);
    }
    canvas.dot(line.ccm, "ccm", "#dc2626", marker_r);
    canvas.dot(line.cm, "cm", "#16a34a", marker_r);
  }

  const Vec2 span = canvas.hi - canvas.lo;
  const double margin = 0.05 * std::max(span.x(), span.y());
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
      << num(canvas.lo.x() - margin) << " " << num(canvas.lo.y() - margin)
      << " " << num(span.x() + 2 * margin) << " "
      << num(span.y() + 2 * margin) << "\">\n"
      << canvas.body.str() << "</svg>\n";
  return out.str();
}

}  // namespace ccm::io
