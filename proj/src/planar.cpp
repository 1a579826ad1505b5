#include "ccm/planar.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace ccm {

namespace {

void require_positive_area(double area, const Tolerance& tol,
                           ErrorCode code = ErrorCode::ZeroArea) {
  if (std::abs(area) <= tol.eps_area) {
    throw Error(code, "signed area below floor");
  }
}

bool finite(const Vec2& v) {
  return std::isfinite(v.x()) && std::isfinite(v.y());
}

}  // namespace

OrientedPolygon::OrientedPolygon(std::vector<Vec2> vertices)
    : verts_(std::move(vertices)) {
  const int n = static_cast<int>(verts_.size());
  if (n < 3) {
    throw Error(ErrorCode::InvalidPolygon, "polygon needs at least 3 vertices");
  }
  for (int i = 0; i < n; ++i) {
    if (!finite(verts_[i])) {
      throw Error(ErrorCode::InvalidPolygon, "non-finite vertex");
    }
    if (verts_[i] == verts_[(i + 1) % n]) {
      throw Error(ErrorCode::InvalidPolygon,
                  "consecutive vertices must be distinct");
    }
  }
  for (int i = 0; i < n; ++i) {
    area_ += 0.5 * cross2(verts_[i], verts_[(i + 1) % n]);
    for (int j = i + 1; j < n; ++j) {
      diameter_ = std::max(diameter_, (verts_[j] - verts_[i]).norm());
    }
  }
}

const Vec2& OrientedPolygon::vertex(int i) const {
  const int n = size();
  int k = i % n;
  if (k < 0) k += n;
  return verts_[k];
}

Vec2 OrientedPolygon::vertex_centroid() const {
  Vec2 sum = Vec2::Zero();
  for (const Vec2& v : verts_) sum += v;
  return sum / static_cast<double>(size());
}

Vec2 ccm_fan(const OrientedPolygon& p, const Vec2& o, const Tolerance& tol) {
  require_positive_area(p.signed_area(), tol);
  Vec2 acc = Vec2::Zero();
  for (int i = 0; i < p.size(); ++i) {
    const Triangle tri{o, p.vertex(i), p.vertex(i + 1)};
    switch (classify_degeneracy(tri, tol)) {
      case DegeneracyClass::NonDegenerate:
        acc += signed_area(tri) * circumcenter(tri, tol);
        break;
      case DegeneracyClass::SafeDegenerate:
        break;  // zero mass, bounded circumcenter
      case DegeneracyClass::DangerousDegenerate:
        throw Error(ErrorCode::DangerousTriangulation,
                    "base point lies on a side line of the polygon");
    }
  }
  return acc / p.signed_area();
}

Vec2 ccm_fan(const OrientedPolygon& p, const Vec2& o) {
  return ccm_fan(p, o, p.default_tolerance());
}

namespace {

bool base_point_admissible(const OrientedPolygon& p, const Vec2& o,
                           const Tolerance& tol) {
  for (int i = 0; i < p.size(); ++i) {
    const Triangle tri{o, p.vertex(i), p.vertex(i + 1)};
    if (classify_degeneracy(tri, tol) ==
        DegeneracyClass::DangerousDegenerate) {
      return false;
    }
  }
  return true;
}

}  // namespace

Vec2 pick_admissible_base_point(const OrientedPolygon& p,
                                const Tolerance& tol) {
  const Vec2 centroid = p.vertex_centroid();
  if (base_point_admissible(p, centroid, tol)) return centroid;

  Vec2 lo = p.vertices().front();
  Vec2 hi = lo;
  for (const Vec2& v : p.vertices()) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);  // fixed seed: deterministic
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int attempt = 0; attempt < 8; ++attempt) {
    const Vec2 o(lo.x() + (hi.x() - lo.x()) * unit(rng),
                 lo.y() + (hi.y() - lo.y()) * unit(rng));
    if (base_point_admissible(p, o, tol)) return o;
  }
  throw Error(ErrorCode::DangerousTriangulation,
              "no admissible base point found after 8 perturbations");
}

Vec2 ccm_fan_auto(const OrientedPolygon& p, const Tolerance& tol) {
  return ccm_fan(p, pick_admissible_base_point(p, tol), tol);
}

Vec2 ccm_closed_form(const OrientedPolygon& p, const Tolerance& tol) {
  require_positive_area(p.signed_area(), tol);
  double sx = 0.0;
  double sy = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    const double w = p.vertex(i).squaredNorm();
    sx += w * (p.vertex(i + 1).y() - p.vertex(i - 1).y());
    sy -= w * (p.vertex(i + 1).x() - p.vertex(i - 1).x());
  }
  return Vec2(sx, sy) / (4.0 * p.signed_area());
}

Vec2 ccm_closed_form(const OrientedPolygon& p) {
  return ccm_closed_form(p, p.default_tolerance());
}

Vec2 ccm_rotated_form(const OrientedPolygon& p, const Tolerance& tol) {
  require_positive_area(p.signed_area(), tol);
  Vec2 acc = Vec2::Zero();
  for (int i = 0; i < p.size(); ++i) {
    acc += p.vertex(i).squaredNorm() * (p.vertex(i + 1) - p.vertex(i - 1));
  }
  return acc / (4.0 * p.signed_area());
}

Vec2 cm_lamina(const OrientedPolygon& p, const Tolerance& tol) {
  require_positive_area(p.signed_area(), tol);
  double sx = 0.0;
  double sy = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    const Vec2& u = p.vertex(i);
    const Vec2& v = p.vertex(i + 1);
    const double w = cross2(u, v);
    sx += (u.x() + v.x()) * w;
    sy += (u.y() + v.y()) * w;
  }
  return Vec2(sx, sy) / (6.0 * p.signed_area());
}

Vec2 cm_lamina(const OrientedPolygon& p) {
  return cm_lamina(p, p.default_tolerance());
}

Vec2 c_t(const OrientedPolygon& p, CenterParameter t, const Tolerance& tol) {
  return t.t * cm_lamina(p, tol) + (1.0 - t.t) * ccm_closed_form(p, tol);
}

Vec2 c_t(const OrientedPolygon& p, CenterParameter t) {
  return c_t(p, t, p.default_tolerance());
}

EulerLine euler_line(const OrientedPolygon& p, const Tolerance& tol) {
  EulerLine line;
  line.ccm = ccm_closed_form(p, tol);
  line.cm = cm_lamina(p, tol);
  line.degenerate = (line.ccm - line.cm).norm() < tol.eps_rel * p.diameter();
  return line;
}

EulerLine euler_line(const OrientedPolygon& p) {
  return euler_line(p, p.default_tolerance());
}

Vec2 ccm_quadrilateral_bisectors(const Vec2& a, const Vec2& b, const Vec2& c,
                                 const Vec2& d, const Tolerance& tol) {
  // Signed area of ABCD is half the cross product of the diagonals, which
  // is also the determinant of the bisector system: both vanish together.
  const double area = 0.5 * cross2(c - a, d - b);
  if (std::abs(area) <= tol.eps_area) {
    throw Error(ErrorCode::ParallelBisectors,
                "diagonal bisectors are parallel (zero signed area)");
  }
  Eigen::Matrix2d m;
  m.row(0) = (c - a).transpose();
  m.row(1) = (d - b).transpose();
  const Vec2 rhs(0.5 * (c.squaredNorm() - a.squaredNorm()),
                 0.5 * (d.squaredNorm() - b.squaredNorm()));
  return m.partialPivLu().solve(rhs);
}

std::array<double, 4> subtriangle_distance_ratios(
    const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d,
    CenterParameter t, const Tolerance& tol) {
  const OrientedPolygon quad({a, b, c, d});
  require_positive_area(quad.signed_area(), tol, ErrorCode::Degenerate);
  const std::array<OrientedPolygon, 4> tris = {
      OrientedPolygon({b, c, d}), OrientedPolygon({c, d, a}),
      OrientedPolygon({d, a, b}), OrientedPolygon({a, b, c})};
  for (const OrientedPolygon& tri : tris) {
    require_positive_area(tri.signed_area(), tol, ErrorCode::Degenerate);
  }
  const Vec2 center = c_t(quad, t, tol);
  std::array<double, 4> dist{};
  for (int i = 0; i < 4; ++i) {
    dist[i] = (c_t(tris[i], t, tol) - center).norm();
  }
  return dist;
}

std::pair<OrientedPolygon, OrientedPolygon> split_polygon(
    const OrientedPolygon& p, const VertexCut& cut) {
  const int n = p.size();
  if (cut.start < 0 || cut.start >= n || cut.end < 0 || cut.end >= n) {
    throw Error(ErrorCode::InvalidCut, "cut endpoint index out of range");
  }
  if (cut.start == cut.end) {
    throw Error(ErrorCode::InvalidCut, "cut endpoints coincide");
  }
  const int k = ((cut.end - cut.start) % n + n) % n;
  // First piece: vertices start..end along the polygon, then the waypoints
  // reversed; second piece: start, waypoints, end, then the remaining
  // vertices back to start.
  std::vector<Vec2> q;
  for (int j = 0; j <= k; ++j) q.push_back(p.vertex(cut.start + j));
  q.insert(q.end(), cut.waypoints.rbegin(), cut.waypoints.rend());
  std::vector<Vec2> r;
  r.push_back(p.vertex(cut.start));
  r.insert(r.end(), cut.waypoints.begin(), cut.waypoints.end());
  for (int j = k; j < n; ++j) r.push_back(p.vertex(cut.start + j));
  try {
    return {OrientedPolygon(std::move(q)), OrientedPolygon(std::move(r))};
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidCut, e.what());
  }
}

Vec2 archimedes_combine(const OrientedPolygon& p, const VertexCut& cut,
                        const Tolerance& tol) {
  const auto [q, r] = split_polygon(p, cut);
  if (std::abs(q.signed_area()) <= tol.eps_area ||
      std::abs(r.signed_area()) <= tol.eps_area) {
    throw Error(ErrorCode::ZeroAreaPiece,
                "a piece has zero area; its circumcenter contribution "
                "exists only as a weighted limit");
  }
  const std::array<WeightedPoint, 2> parts = {
      WeightedPoint{ccm_closed_form(q, tol), q.signed_area()},
      WeightedPoint{ccm_closed_form(r, tol), r.signed_area()}};
  return combine(parts, tol.eps_area).point;
}

Vec2 archimedes_combine(const OrientedPolygon& p, const VertexCut& cut) {
  return archimedes_combine(p, cut, p.default_tolerance());
}

Vec2 curve_ccm(std::span<const Vec2> samples) {
  if (samples.size() < 16) {
    throw Error(ErrorCode::InvalidInput,
                "curve approximation needs at least 16 samples");
  }
  const OrientedPolygon p(std::vector<Vec2>(samples.begin(), samples.end()));
  return ccm_closed_form(p);
}

SymmetryReport symmetry_diagnostics(const OrientedPolygon& p,
                                    std::optional<LineSpec> mirror,
                                    const Tolerance& tol) {
  SymmetryReport report;
  report.euler = euler_line(p, tol);

  if (mirror) {
    const double dn = mirror->direction.norm();
    if (dn <= 0.0) {
      throw Error(ErrorCode::InvalidInput, "mirror line needs a direction");
    }
    const Vec2 dir = mirror->direction / dn;
    const double d_ccm = std::abs(cross2(dir, report.euler.ccm - mirror->point));
    const double d_cm = std::abs(cross2(dir, report.euler.cm - mirror->point));
    report.mirror_distance = std::max(d_ccm, d_cm);
    report.on_mirror = *report.mirror_distance < tol.eps_rel * p.diameter();
  }

  // Side-length census: equilateral, or all-but-one equal.
  const int n = p.size();
  std::vector<double> len(n);
  for (int i = 0; i < n; ++i) len[i] = (p.vertex(i + 1) - p.vertex(i)).norm();
  const double eq_tol = 1e-9;  // relative, per the equilateral convention
  auto all_equal_except = [&](int skip) {
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (int i = 0; i < n; ++i) {
      if (i == skip) continue;
      lo = first ? len[i] : std::min(lo, len[i]);
      hi = first ? len[i] : std::max(hi, len[i]);
      first = false;
    }
    return hi - lo <= eq_tol * hi;
  };
  report.equilateral = all_equal_except(-1);
  if (!report.equilateral) {
    int odd = -1;
    for (int i = 0; i < n; ++i) {
      if (all_equal_except(i)) {
        if (odd >= 0) {
          odd = -1;  // ambiguous
          break;
        }
        odd = i;
      }
    }
    if (odd >= 0) {
      report.odd_side = odd;
      if (!report.euler.degenerate) {
        const Vec2 e = (report.euler.cm - report.euler.ccm).normalized();
        const Vec2 s = (p.vertex(odd + 1) - p.vertex(odd)).normalized();
        report.odd_side_angle =
            std::acos(std::clamp(std::abs(e.dot(s)), 0.0, 1.0));
      }
    }
  }
  return report;
}

SymmetryReport symmetry_diagnostics(const OrientedPolygon& p,
                                    std::optional<LineSpec> mirror) {
  return symmetry_diagnostics(p, mirror, p.default_tolerance());
}

}  // namespace ccm
