#include "ccm/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <utility>

namespace ccm::gen {

namespace {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double gaussian(Rng& rng) {
  return std::normal_distribution<double>(0.0, 1.0)(rng);
}

Vec2 random_point(Rng& rng, double half_box) {
  return Vec2(uniform(rng, -half_box, half_box),
              uniform(rng, -half_box, half_box));
}

// Sorted angles with a minimum cyclic gap.
std::vector<double> spaced_angles(Rng& rng, int n, double min_gap) {
  for (;;) {
    std::vector<double> a(n);
    for (double& x : a) x = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    std::sort(a.begin(), a.end());
    bool ok = a.front() + 2.0 * std::numbers::pi - a.back() >= min_gap;
    for (int i = 0; ok && i + 1 < n; ++i) ok = a[i + 1] - a[i] >= min_gap;
    if (ok) return a;
  }
}

Eigen::Matrix3d random_rotation3(Rng& rng) {
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = gaussian(rng);
  Eigen::HouseholderQR<Eigen::Matrix3d> qr(m);
  Eigen::Matrix3d q = qr.householderQ();
  if (q.determinant() < 0) q.col(0) = -q.col(0);
  return q;
}

Eigen::Matrix4d random_rotation4(Rng& rng) {
  Eigen::Matrix4d m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = gaussian(rng);
  Eigen::HouseholderQR<Eigen::Matrix4d> qr(m);
  Eigen::Matrix4d q = qr.householderQ();
  if (q.determinant() < 0) q.col(0) = -q.col(0);
  return q;
}

VecN to_vecn(const Vec3& v) {
  VecN w(3);
  w << v.x(), v.y(), v.z();
  return w;
}

// Swap two indices of any facet whose cone from `interior` has negative
// volume, making the facet orientations consistently outward.
void orient_outward(const std::vector<VecN>& verts,
                    std::vector<std::vector<int>>& facets,
                    const VecN& interior) {
  const int n = static_cast<int>(interior.size());
  Eigen::MatrixXd edges(n, n);
  for (std::vector<int>& f : facets) {
    for (int j = 0; j < n; ++j) edges.col(j) = verts[f[j]] - interior;
    if (edges.determinant() < 0.0) std::swap(f[0], f[1]);
  }
}

// Rotation of v about a unit axis by angle (Rodrigues).
Vec3 rotate_about(const Vec3& v, const Vec3& axis, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return v * c + axis.cross(v) * s + axis * (axis.dot(v) * (1.0 - c));
}

}  // namespace

OrientedPolygon random_polygon(Rng& rng, int n_min, int n_max,
                               double half_box) {
  for (;;) {
    const int n = uniform_int(rng, n_min, n_max);
    std::vector<Vec2> verts(n);
    for (Vec2& v : verts) v = random_point(rng, half_box);
    try {
      OrientedPolygon p(std::move(verts));
      if (std::abs(p.signed_area()) >
          1e-4 * p.diameter() * p.diameter()) {
        return p;
      }
    } catch (const Error&) {
    }
  }
}

OrientedPolygon random_convex_polygon(Rng& rng, double half_box) {
  for (;;) {
    const int m = uniform_int(rng, 8, 20);
    std::vector<Vec2> pts(m);
    for (Vec2& v : pts) v = random_point(rng, half_box);
    // Monotone chain.
    std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
      return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
    });
    auto build = [&](auto begin, auto end) {
      std::vector<Vec2> chain;
      for (auto it = begin; it != end; ++it) {
        while (chain.size() >= 2 &&
               cross2(chain[chain.size() - 1] - chain[chain.size() - 2],
                      *it - chain[chain.size() - 2]) <= 1e-9) {
          chain.pop_back();
        }
        chain.push_back(*it);
      }
      return chain;
    };
    std::vector<Vec2> lower = build(pts.begin(), pts.end());
    std::vector<Vec2> upper = build(pts.rbegin(), pts.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    if (lower.size() < 4) continue;
    OrientedPolygon p(std::move(lower));
    if (std::abs(p.signed_area()) > 0.05 * p.diameter() * p.diameter()) {
      return p;
    }
  }
}

CyclicPolygon random_cyclic_polygon(Rng& rng, int n_min, int n_max) {
  const int n = uniform_int(rng, n_min, n_max);
  const Vec2 center = random_point(rng, 5.0);
  const double radius = uniform(rng, 0.5, 4.0);
  const std::vector<double> angles = spaced_angles(rng, n, 0.05);
  std::vector<Vec2> verts(n);
  for (int i = 0; i < n; ++i) {
    verts[i] =
        center + radius * Vec2(std::cos(angles[i]), std::sin(angles[i]));
  }
  return {OrientedPolygon(std::move(verts)), center, radius};
}

OrientedPolygon random_equilateral_polygon(Rng& rng, int n_min, int n_max) {
  for (;;) {
    const int n = uniform_int(rng, n_min, n_max);
    std::vector<Vec2> steps(n);
    for (Vec2& s : steps) {
      const double a = uniform(rng, 0.0, 2.0 * std::numbers::pi);
      s = Vec2(std::cos(a), std::sin(a));
    }
    // Remove the drift and renormalize until the walk closes.
    bool closed = false;
    for (int iter = 0; iter < 2000; ++iter) {
      Vec2 drift = Vec2::Zero();
      for (const Vec2& s : steps) drift += s;
      if (drift.norm() < 1e-14 * n) {
        closed = true;
        break;
      }
      drift /= static_cast<double>(n);
      bool bad = false;
      for (Vec2& s : steps) {
        const Vec2 c = s - drift;
        if (c.norm() < 1e-6) {
          bad = true;
          break;
        }
        s = c.normalized();
      }
      if (bad) break;
    }
    if (!closed) continue;
    std::vector<Vec2> verts(n);
    Vec2 pos = Vec2::Zero();
    for (int i = 0; i < n; ++i) {
      verts[i] = pos;
      pos += steps[i];
    }
    try {
      OrientedPolygon p(std::move(verts));
      if (std::abs(p.signed_area()) > 0.1) return p;
    } catch (const Error&) {
    }
  }
}

Triangle random_triangle(Rng& rng, double half_box) {
  for (;;) {
    const Triangle t{random_point(rng, half_box), random_point(rng, half_box),
                     random_point(rng, half_box)};
    if (std::abs(signed_area(t)) > 0.02 * t.squared_diameter()) return t;
  }
}

MirrorPolygon random_mirror_polygon(Rng& rng) {
  for (;;) {
    const double phi = uniform(rng, 0.0, std::numbers::pi);
    const Vec2 dir(std::cos(phi), std::sin(phi));
    const Vec2 normal(-dir.y(), dir.x());
    const Vec2 origin = random_point(rng, 3.0);
    const double reach = uniform(rng, 1.5, 4.0);
    const int m = uniform_int(rng, 1, 3);
    // One chain strictly on the positive side, mirrored back on the return.
    std::vector<double> s(m);
    for (double& x : s) x = uniform(rng, -reach * 0.8, reach * 0.8);
    std::sort(s.begin(), s.end());
    std::vector<Vec2> verts;
    verts.push_back(origin - reach * dir);
    std::vector<Vec2> mirrored;
    for (int i = 0; i < m; ++i) {
      const double off = uniform(rng, 0.4, 2.5);
      verts.push_back(origin + s[i] * dir + off * normal);
      mirrored.push_back(origin + s[i] * dir - off * normal);
    }
    verts.push_back(origin + reach * dir);
    verts.insert(verts.end(), mirrored.rbegin(), mirrored.rend());
    try {
      OrientedPolygon p(std::move(verts));
      if (std::abs(p.signed_area()) > 0.02 * p.diameter() * p.diameter()) {
        return {std::move(p), LineSpec{origin, dir}};
      }
    } catch (const Error&) {
    }
  }
}

RotSymPolygon random_rotationally_symmetric_polygon(Rng& rng) {
  for (;;) {
    const int order = uniform_int(rng, 2, 5);
    const int m = uniform_int(rng, 2, 3);
    const Vec2 center = random_point(rng, 3.0);
    const double sector = 2.0 * std::numbers::pi / order;
    std::vector<double> angles(m);
    angles[0] = uniform(rng, 0.02 * sector, 0.4 * sector);
    for (int i = 1; i < m; ++i) {
      angles[i] = angles[i - 1] + uniform(rng, 0.15 * sector, 0.5 * sector);
    }
    if (angles.back() >= 0.95 * sector) continue;
    // Radii repeat with the same period: one draw per sector position,
    // reused across sectors.
    std::vector<double> radii(m);
    for (double& r : radii) r = uniform(rng, 1.0, 3.0);
    std::vector<Vec2> verts;
    for (int j = 0; j < order; ++j) {
      for (int i = 0; i < m; ++i) {
        const double a = angles[i] + j * sector;
        verts.push_back(center +
                        radii[i] * Vec2(std::cos(a), std::sin(a)));
      }
    }
    try {
      OrientedPolygon p(std::move(verts));
      // No side line may pass through the center.
      bool ok = true;
      for (int i = 0; i < p.size() && ok; ++i) {
        const Vec2 d = (p.vertex(i + 1) - p.vertex(i)).normalized();
        if (std::abs(cross2(d, center - p.vertex(i))) <
            0.05 * p.diameter()) {
          ok = false;
        }
      }
      if (ok && std::abs(p.signed_area()) > 0.1) {
        return {std::move(p), center, order};
      }
    } catch (const Error&) {
    }
  }
}

OrientedPolygon random_three_equal_sides_quad(Rng& rng) {
  for (;;) {
    const Vec2 v0 = random_point(rng, 2.0);
    double heading = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    std::vector<Vec2> verts = {v0};
    for (int i = 0; i < 3; ++i) {
      verts.push_back(verts.back() +
                      Vec2(std::cos(heading), std::sin(heading)));
      heading += uniform(rng, 0.35, 1.1);
    }
    const double closing = (verts[0] - verts[3]).norm();
    if (closing < 0.15 || std::abs(closing - 1.0) < 0.05) continue;
    try {
      OrientedPolygon p(std::move(verts));
      if (std::abs(p.signed_area()) < 0.1) continue;
      const EulerLine e = euler_line(p);
      if (e.degenerate ||
          (e.ccm - e.cm).norm() < 1e-6 * p.diameter()) {
        continue;
      }
      return p;
    } catch (const Error&) {
    }
  }
}

SimplicialBoundary simplex_boundary(const Simplex& s) {
  const int n = s.dim();
  std::vector<std::vector<int>> facets;
  for (int omit = 0; omit <= n; ++omit) {
    std::vector<int> f;
    for (int i = 0; i <= n; ++i) {
      if (i != omit) f.push_back(i);
    }
    if (omit % 2 == 1) std::swap(f[0], f[1]);
    facets.push_back(std::move(f));
  }
  SimplicialBoundary b(n, s.vertices, facets);
  if (polytope_volume(b) * simplex_signed_volume(s) < 0.0) {
    for (std::vector<int>& f : facets) std::swap(f[0], f[1]);
    return SimplicialBoundary(n, s.vertices, facets);
  }
  return b;
}

Simplex random_simplex(Rng& rng, int dim, double half_box) {
  for (;;) {
    Simplex s;
    for (int i = 0; i <= dim; ++i) {
      VecN v(dim);
      for (int k = 0; k < dim; ++k) v(k) = uniform(rng, -half_box, half_box);
      s.vertices.push_back(std::move(v));
    }
    double fac = 1.0;
    for (int i = 2; i <= dim; ++i) fac *= i;
    const double diam = std::sqrt(s.squared_diameter());
    if (std::abs(simplex_signed_volume(s)) >
        0.01 * std::pow(diam, dim) / fac) {
      return s;
    }
  }
}

namespace {

// Unit octahedron triangulation: vertices +-e_i, the eight octant faces.
void octahedron_template(std::vector<Vec3>& dirs,
                         std::vector<std::vector<int>>& faces) {
  dirs = {Vec3(1, 0, 0),  Vec3(-1, 0, 0), Vec3(0, 1, 0),
          Vec3(0, -1, 0), Vec3(0, 0, 1),  Vec3(0, 0, -1)};
  faces.clear();
  for (int sx = 0; sx < 2; ++sx) {
    for (int sy = 0; sy < 2; ++sy) {
      for (int sz = 0; sz < 2; ++sz) {
        faces.push_back({sx, 2 + sy, 4 + sz});
      }
    }
  }
}

}  // namespace

SimplicialBoundary random_boundary_3d(Rng& rng) {
  std::vector<Vec3> dirs;
  std::vector<std::vector<int>> faces;
  octahedron_template(dirs, faces);
  const Eigen::Matrix3d rot = random_rotation3(rng);
  const Vec3 center(uniform(rng, -4, 4), uniform(rng, -4, 4),
                    uniform(rng, -4, 4));
  VecN c = to_vecn(center);
  std::vector<VecN> verts;
  for (const Vec3& d : dirs) {
    const double r = uniform(rng, 0.6, 1.8);
    verts.push_back(to_vecn(center + r * (rot * d)));
  }
  orient_outward(verts, faces, c);
  return SimplicialBoundary(3, std::move(verts), std::move(faces));
}

SimplicialBoundary random_boundary_4d(Rng& rng) {
  if (uniform_int(rng, 0, 1) == 0) {
    return simplex_boundary(random_simplex(rng, 4, 2.5));
  }
  // Cross-polytope: vertices +-e_i, facets one vertex from each axis pair.
  std::vector<VecN> verts;
  const Eigen::Matrix4d rot = random_rotation4(rng);
  Eigen::Vector4d center;
  for (int i = 0; i < 4; ++i) center(i) = uniform(rng, -3, 3);
  for (int axis = 0; axis < 4; ++axis) {
    for (int sign = 0; sign < 2; ++sign) {
      Eigen::Vector4d d = Eigen::Vector4d::Zero();
      d(axis) = sign == 0 ? 1.0 : -1.0;
      const double r = uniform(rng, 0.7, 1.6);
      const Eigen::Vector4d v = center + r * (rot * d);
      VecN w(4);
      w << v(0), v(1), v(2), v(3);
      verts.push_back(w);
    }
  }
  std::vector<std::vector<int>> facets;
  for (int s0 = 0; s0 < 2; ++s0)
    for (int s1 = 0; s1 < 2; ++s1)
      for (int s2 = 0; s2 < 2; ++s2)
        for (int s3 = 0; s3 < 2; ++s3)
          facets.push_back({s0, 2 + s1, 4 + s2, 6 + s3});
  VecN c(4);
  c << center(0), center(1), center(2), center(3);
  orient_outward(verts, facets, c);
  return SimplicialBoundary(4, std::move(verts), std::move(facets));
}

InscribedPolytope random_inscribed_polytope_3d(Rng& rng) {
  std::vector<Vec3> base;
  std::vector<std::vector<int>> faces;
  octahedron_template(base, faces);
  {  // Orient the clean template outward once; jitter never re-derives it.
    std::vector<VecN> tmpl;
    for (const Vec3& d : base) tmpl.push_back(to_vecn(d));
    orient_outward(tmpl, faces, VecN::Zero(3));
  }
  const bool subdivide = uniform_int(rng, 0, 1) == 1;
  if (subdivide) {
    // One round of midpoint subdivision inherits orientation and closure.
    std::vector<std::vector<int>> fine;
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      base.push_back((base[a] + base[b]).normalized());
      const int idx = static_cast<int>(base.size()) - 1;
      midpoint.emplace(key, idx);
      return idx;
    };
    for (const std::vector<int>& f : faces) {
      const int ab = mid(f[0], f[1]);
      const int bc = mid(f[1], f[2]);
      const int ca = mid(f[2], f[0]);
      fine.push_back({f[0], ab, ca});
      fine.push_back({ab, f[1], bc});
      fine.push_back({ca, bc, f[2]});
      fine.push_back({ab, bc, ca});
    }
    faces = std::move(fine);
  }
  // Jitter the directions, rejecting draws that break star-shapedness
  // (every oriented facet must keep a solidly positive determinant).
  const double jitter = subdivide ? 0.08 : 0.2;
  std::vector<Vec3> dirs;
  for (;;) {
    dirs = base;
    for (Vec3& d : dirs) {
      const Vec3 g(gaussian(rng), gaussian(rng), gaussian(rng));
      d = (d + jitter * g).normalized();
    }
    bool ok = true;
    Eigen::Matrix3d m;
    for (const std::vector<int>& f : faces) {
      for (int j = 0; j < 3; ++j) m.col(j) = dirs[f[j]];
      if (m.determinant() < 0.02) {
        ok = false;
        break;
      }
    }
    if (ok) break;
  }
  const Eigen::Matrix3d rot = random_rotation3(rng);
  const double radius = uniform(rng, 0.5, 3.0);
  const Vec3 center(uniform(rng, -4, 4), uniform(rng, -4, 4),
                    uniform(rng, -4, 4));
  std::vector<VecN> verts;
  for (const Vec3& d : dirs) {
    verts.push_back(to_vecn(center + radius * (rot * d)));
  }
  return {SimplicialBoundary(3, std::move(verts), std::move(faces)),
          to_vecn(center), radius};
}

InscribedPolytope random_inscribed_polytope_4d(Rng& rng) {
  std::vector<Eigen::Vector4d> base;
  for (int axis = 0; axis < 4; ++axis) {
    for (int sign = 0; sign < 2; ++sign) {
      Eigen::Vector4d d = Eigen::Vector4d::Zero();
      d(axis) = sign == 0 ? 1.0 : -1.0;
      base.push_back(d);
    }
  }
  std::vector<std::vector<int>> facets;
  for (int s0 = 0; s0 < 2; ++s0)
    for (int s1 = 0; s1 < 2; ++s1)
      for (int s2 = 0; s2 < 2; ++s2)
        for (int s3 = 0; s3 < 2; ++s3)
          facets.push_back({s0, 2 + s1, 4 + s2, 6 + s3});
  {  // Orient the clean cross-polytope outward once.
    std::vector<VecN> tmpl;
    for (const Eigen::Vector4d& d : base) {
      VecN w(4);
      w << d(0), d(1), d(2), d(3);
      tmpl.push_back(w);
    }
    orient_outward(tmpl, facets, VecN::Zero(4));
  }
  std::vector<Eigen::Vector4d> dirs;
  for (;;) {
    dirs = base;
    for (Eigen::Vector4d& d : dirs) {
      for (int i = 0; i < 4; ++i) d(i) += 0.12 * gaussian(rng);
      d.normalize();
    }
    bool ok = true;
    Eigen::Matrix4d m;
    for (const std::vector<int>& f : facets) {
      for (int j = 0; j < 4; ++j) m.col(j) = dirs[f[j]];
      if (m.determinant() < 0.02) {
        ok = false;
        break;
      }
    }
    if (ok) break;
  }
  const Eigen::Matrix4d rot = random_rotation4(rng);
  Eigen::Vector4d center;
  for (int i = 0; i < 4; ++i) center(i) = uniform(rng, -3, 3);
  const double radius = uniform(rng, 0.5, 2.5);
  std::vector<VecN> verts;
  for (const Eigen::Vector4d& d : dirs) {
    const Eigen::Vector4d v = center + radius * (rot * d);
    VecN w(4);
    w << v(0), v(1), v(2), v(3);
    verts.push_back(w);
  }
  VecN c(4);
  c << center(0), center(1), center(2), center(3);
  return {SimplicialBoundary(4, std::move(verts), std::move(facets)), c,
          radius};
}

SimplicialBoundary box_boundary(const Vec3& lo, const Vec3& hi) {
  std::vector<Vec3> corners;
  for (int i = 0; i < 8; ++i) {
    corners.emplace_back(i & 1 ? hi.x() : lo.x(), i & 2 ? hi.y() : lo.y(),
                         i & 4 ? hi.z() : lo.z());
  }
  // Two triangles per face; orientation fixed afterwards.
  const int quads[6][4] = {{0, 1, 3, 2}, {4, 5, 7, 6}, {0, 1, 5, 4},
                           {2, 3, 7, 6}, {0, 2, 6, 4}, {1, 3, 7, 5}};
  std::vector<std::vector<int>> faces;
  for (const auto& q : quads) {
    faces.push_back({q[0], q[1], q[2]});
    faces.push_back({q[0], q[2], q[3]});
  }
  std::vector<VecN> verts;
  for (const Vec3& c : corners) verts.push_back(to_vecn(c));
  orient_outward(verts, faces, to_vecn(0.5 * (lo + hi)));
  return SimplicialBoundary(3, std::move(verts), std::move(faces));
}

SimplicialBoundary octahedron_boundary(double scale, const Vec3& center) {
  std::vector<Vec3> dirs;
  std::vector<std::vector<int>> faces;
  octahedron_template(dirs, faces);
  std::vector<VecN> verts;
  for (const Vec3& d : dirs) verts.push_back(to_vecn(center + scale * d));
  orient_outward(verts, faces, to_vecn(center));
  return SimplicialBoundary(3, std::move(verts), std::move(faces));
}

namespace {

// Sign of the permutation sorting `ridge`, by inversion count.
int sort_parity(const std::vector<int>& ridge) {
  int inversions = 0;
  for (size_t i = 0; i < ridge.size(); ++i) {
    for (size_t j = i + 1; j < ridge.size(); ++j) {
      if (ridge[i] > ridge[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

std::pair<SimplicialBoundary, SimplicialBoundary> cone_split(
    const SimplicialBoundary& p, const VecN& z,
    const std::vector<bool>& in_first) {
  const int n = p.dim();
  // Oriented ridge chain of the selected facet subset: interior ridges
  // cancel, boundary ridges keep the induced orientation coefficient.
  std::map<std::vector<int>, int> chain;
  for (int f = 0; f < p.facet_count(); ++f) {
    if (!in_first[f]) continue;
    const std::vector<int>& facet = p.facets()[f];
    for (int omit = 0; omit < n; ++omit) {
      std::vector<int> ridge;
      for (int i = 0; i < n; ++i) {
        if (i != omit) ridge.push_back(facet[i]);
      }
      const int sign =
          (omit % 2 == 0 ? 1 : -1) * sort_parity(ridge);
      std::sort(ridge.begin(), ridge.end());
      chain[ridge] += sign;
    }
  }
  const int z_index = static_cast<int>(p.vertex_table().size());
  std::vector<std::vector<int>> walls_first;
  std::vector<std::vector<int>> walls_second;
  for (const auto& [ridge, coeff] : chain) {
    for (int rep = 0; rep < std::abs(coeff); ++rep) {
      std::vector<int> wall;
      wall.push_back(z_index);
      wall.insert(wall.end(), ridge.begin(), ridge.end());
      std::vector<int> flipped = wall;
      std::swap(flipped[1], flipped[2]);
      // The first piece needs the wall chain -cone(z, boundary of S).
      if (coeff > 0) {
        walls_first.push_back(flipped);
        walls_second.push_back(wall);
      } else {
        walls_first.push_back(wall);
        walls_second.push_back(flipped);
      }
    }
  }
  std::vector<VecN> verts = p.vertex_table();
  verts.push_back(z);
  std::vector<std::vector<int>> facets_first = walls_first;
  std::vector<std::vector<int>> facets_second = walls_second;
  for (int f = 0; f < p.facet_count(); ++f) {
    (in_first[f] ? facets_first : facets_second).push_back(p.facets()[f]);
  }
  return {SimplicialBoundary(n, verts, facets_first),
          SimplicialBoundary(n, verts, facets_second)};
}

std::pair<SimplicialBoundary, SimplicialBoundary> random_cone_split(
    Rng& rng, const SimplicialBoundary& p) {
  const int nf = p.facet_count();
  const double total = polytope_volume(p);
  VecN centroid = VecN::Zero(p.dim());
  for (const VecN& v : p.vertex_table()) centroid += v;
  centroid /= static_cast<double>(p.vertex_table().size());
  for (int tries = 0; tries < 100; ++tries) {
    std::vector<int> order(nf);
    for (int i = 0; i < nf; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    const int k = uniform_int(rng, 1, nf - 1);
    std::vector<bool> in_first(nf, false);
    for (int i = 0; i < k; ++i) in_first[order[i]] = true;
    VecN z = centroid;
    for (int i = 0; i < p.dim(); ++i) {
      z(i) += 0.1 * p.diameter() * gaussian(rng);
    }
    try {
      auto pieces = cone_split(p, z, in_first);
      const double v1 = polytope_volume(pieces.first);
      const double v2 = polytope_volume(pieces.second);
      if (std::abs(v1) > 0.02 * std::abs(total) &&
          std::abs(v2) > 0.02 * std::abs(total) &&
          std::abs(v1 + v2 - total) < 1e-9 * std::abs(total)) {
        return pieces;
      }
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::InvalidInput, "no usable cone split found");
}

Vec3 random_unit_vector(Rng& rng) {
  for (;;) {
    const Vec3 v(gaussian(rng), gaussian(rng), gaussian(rng));
    if (v.norm() > 1e-6) return v.normalized();
  }
}

SphericalPolygon random_spherical_polygon(Rng& rng, int n_min, int n_max) {
  const int n = uniform_int(rng, n_min, n_max);
  const Vec3 axis = random_unit_vector(rng);
  Vec3 e1 = axis.cross(std::abs(axis.z()) < 0.9 ? Vec3(0, 0, 1)
                                                : Vec3(1, 0, 0));
  e1.normalize();
  const Vec3 e2 = axis.cross(e1);
  const std::vector<double> angles = spaced_angles(rng, n, 0.08);
  std::vector<Vec3> verts(n);
  for (int i = 0; i < n; ++i) {
    const double colat = uniform(rng, 0.25, 1.1);
    verts[i] = std::cos(colat) * axis +
               std::sin(colat) * (std::cos(angles[i]) * e1 +
                                  std::sin(angles[i]) * e2);
  }
  return SphericalPolygon(std::move(verts));
}

SphericalPolygon random_equilateral_spherical_polygon(Rng& rng, int n_min,
                                                      int n_max) {
  for (;;) {
    SphericalPolygon seed = random_spherical_polygon(rng, n_min, n_max);
    std::vector<Vec3> v = seed.vertices();
    const int n = static_cast<int>(v.size());
    double target = 0.0;
    for (int i = 0; i < n; ++i) {
      target += spherical_distance(v[i], v[(i + 1) % n]);
    }
    target /= n;
    bool converged = false;
    for (int sweep = 0; sweep < 20000 && !converged; ++sweep) {
      double worst = 0.0;
      for (int i = 0; i < n; ++i) {
        Vec3& a = v[i];
        Vec3& b = v[(i + 1) % n];
        const Vec3 cr = a.cross(b);
        const double crn = cr.norm();
        if (crn < 1e-12) {
          worst = 1.0;
          break;
        }
        const Vec3 axis = cr / crn;
        const double d = std::atan2(crn, a.dot(b));
        const double delta = 0.5 * (d - target);
        // Rotating a by +delta about the axis moves it toward b.
        a = rotate_about(a, axis, delta).normalized();
        b = rotate_about(b, axis, -delta).normalized();
        worst = std::max(worst, std::abs(d - target));
      }
      if (worst < 5e-14) converged = true;
    }
    if (!converged) continue;
    try {
      SphericalPolygon p(v);
      if (p.diameter() < 0.3) continue;
      spherical_ccm(p);
      spherical_lamina_cm(p);
      return p;
    } catch (const Error&) {
    }
  }
}

}  // namespace ccm::gen
