#include "ccm/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "ccm/axioms.hpp"
#include "ccm/generators.hpp"
#include "ccm/planar.hpp"
#include "ccm/polytope.hpp"
#include "ccm/spherical.hpp"

namespace ccm::verify {

namespace {

std::string fmt(const char* format, ...) {
  va_list args;
  va_start(args, format);
  char buf[512];
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

CheckResult make_check(std::string name, double bound) {
  CheckResult r;
  r.name = std::move(name);
  r.bound = bound;
  return r;
}

void record(CheckResult& r, double err, const std::string& what) {
  ++r.cases;
  r.max_err = std::max(r.max_err, err);
  if (!(err <= r.bound)) {
    ++r.failures;
    if (r.diagnostics.size() < 20) {
      r.diagnostics.push_back(fmt("%s: err=%.3e bound=%.3e", what.c_str(),
                                  err, r.bound));
    }
  }
}

void record_fail(CheckResult& r, const std::string& what) {
  ++r.cases;
  ++r.failures;
  r.diagnostics.push_back(what);
}

void record_pass(CheckResult& r) { ++r.cases; }

// Up to `count` admissible fan base points with their centers.
std::vector<Vec2> fan_centers(gen::Rng& rng, const OrientedPolygon& p,
                              const Tolerance& tol, int count) {
  Vec2 lo = p.vertices().front();
  Vec2 hi = lo;
  for (const Vec2& v : p.vertices()) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  std::vector<Vec2> centers;
  for (int tries = 0; tries < 400 &&
                      centers.size() < static_cast<size_t>(count);
       ++tries) {
    const Vec2 o(std::uniform_real_distribution<double>(lo.x(), hi.x())(rng),
                 std::uniform_real_distribution<double>(lo.y(), hi.y())(rng));
    try {
      centers.push_back(ccm_fan(p, o, tol));
    } catch (const Error&) {
      continue;
    }
  }
  return centers;
}

std::vector<VecN> cone_centers(gen::Rng& rng, const SimplicialBoundary& b,
                               const Tolerance& tol, int count) {
  VecN lo = b.vertex_table().front();
  VecN hi = lo;
  for (const VecN& v : b.vertex_table()) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  std::vector<VecN> centers;
  for (int tries = 0; tries < 400 &&
                      centers.size() < static_cast<size_t>(count);
       ++tries) {
    VecN o(b.dim());
    for (int i = 0; i < b.dim(); ++i) {
      o(i) = std::uniform_real_distribution<double>(lo(i), hi(i))(rng);
    }
    try {
      centers.push_back(ccm_polytope(b, o, tol));
    } catch (const Error&) {
      continue;
    }
  }
  return centers;
}

}  // namespace

CheckResult planar_o_independence(std::uint64_t seed, int cases) {
  CheckResult r = make_check("planar-o-independence", 1e-9);
  gen::Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const OrientedPolygon p = gen::random_polygon(rng, 3, 12, 10.0);
    const Tolerance tol = p.default_tolerance();
    const std::vector<Vec2> centers = fan_centers(rng, p, tol, 3);
    if (centers.size() < 3) {
      record_fail(r, fmt("case %d: fewer than 3 admissible base points", i));
      continue;
    }
    double err = 0.0;
    for (size_t a = 0; a < centers.size(); ++a) {
      for (size_t b = a + 1; b < centers.size(); ++b) {
        err = std::max(err, (centers[a] - centers[b]).norm());
      }
    }
    record(r, err / p.diameter(), fmt("case %d (n=%d)", i, p.size()));
  }
  return r;
}

CheckResult planar_closed_vs_fan(std::uint64_t seed, int cases) {
  CheckResult r = make_check("planar-closed-vs-fan", 1e-9);
  gen::Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const OrientedPolygon p = gen::random_polygon(rng, 3, 12, 10.0);
    const Tolerance tol = p.default_tolerance();
    const std::vector<Vec2> centers = fan_centers(rng, p, tol, 1);
    if (centers.empty()) {
      record_fail(r, fmt("case %d: no admissible base point", i));
      continue;
    }
    const Vec2 closed = ccm_closed_form(p, tol);
    record(r, (closed - centers.front()).norm() / p.diameter(),
           fmt("case %d (n=%d)", i, p.size()));
  }
  return r;
}

CheckResult polytope_o_independence(std::uint64_t seed, int cases) {
  CheckResult r = make_check("polytope-o-independence", 1e-9);
  gen::Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const SimplicialBoundary b = (i % 2 == 0) ? gen::random_boundary_3d(rng)
                                              : gen::random_boundary_4d(rng);
    const Tolerance tol = b.default_tolerance();
    const std::vector<VecN> centers = cone_centers(rng, b, tol, 3);
    if (centers.size() < 3) {
      record_fail(r, fmt("case %d: fewer than 3 admissible base points", i));
      continue;
    }
    double err = 0.0;
    for (size_t a = 0; a < centers.size(); ++a) {
      for (size_t c = a + 1; c < centers.size(); ++c) {
        err = std::max(err, (centers[a] - centers[c]).norm());
      }
    }
    record(r, err / b.diameter(), fmt("case %d (dim=%d)", i, b.dim()));
  }
  return r;
}

CheckResult polytope_closed_vs_fan(std::uint64_t seed, int cases) {
  CheckResult r = make_check("polytope-closed-vs-fan", 1e-9);
  gen::Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const SimplicialBoundary b = (i % 2 == 0) ? gen::random_boundary_3d(rng)
                                              : gen::random_boundary_4d(rng);
    const Tolerance tol = b.default_tolerance();
    const std::vector<VecN> centers = cone_centers(rng, b, tol, 1);
    if (centers.empty()) {
      record_fail(r, fmt("case %d: no admissible base point", i));
      continue;
    }
    const VecN closed = ccm_polytope_closed_form(b, tol);
    record(r, (closed - centers.front()).norm() / b.diameter(),
           fmt("case %d (dim=%d)", i, b.dim()));
  }
  return r;
}

CheckResult archimedes_planar(std::uint64_t seed, int cases) {
  CheckResult r = make_check("archimedes-planar", 1e-9);
  gen::Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const OrientedPolygon p = gen::random_convex_polygon(rng, 5.0);
    const Tolerance tol = p.default_tolerance();
    const int n = p.size();
    VertexCut cut;
    bool have_cut = false;
    for (int tries = 0; tries < 50 && !have_cut; ++tries) {
      cut.start = std::uniform_int_distribution<int>(0, n - 1)(rng);
      const int k = std::uniform_int_distribution<int>(2, n - 2)(rng);
      cut.end = (cut.start + k) % n;
      cut.waypoints.clear();
      const int m = std::uniform_int_distribution<int>(0, 2)(rng);
      if (m > 0) {
        const Vec2 a = p.vertex(cut.start);
        const Vec2 b = p.vertex(cut.end);
        const Vec2 centroid = p.vertex_centroid();
        std::vector<double> ts(m);
        for (double& t : ts) {
          t = std::uniform_real_distribution<double>(0.25, 0.75)(rng);
        }
        std::sort(ts.begin(), ts.end());
        for (double t : ts) {
          const Vec2 on_chord = (1.0 - t) * a + t * b;
          const double s =
              std::uniform_real_distribution<double>(0.05, 0.5)(rng);
          cut.waypoints.push_back(on_chord + s * (centroid - on_chord));
        }
      }
      try {
        const auto [q, rr] = split_polygon(p, cut);
        const double floor = 1e-6 * p.diameter() * p.diameter();
        have_cut = std::abs(q.signed_area()) > floor &&
                   std::abs(rr.signed_area()) > floor;
      } catch (const Error&) {
      }
    }
    if (!have_cut) {
      record_fail(r, fmt("case %d: no usable cut", i));
      continue;
    }
    const auto [q, rr] = split_polygon(p, cut);
    double err =
        (archimedes_combine(p, cut, tol) - ccm_closed_form(p, tol)).norm();
    // The same additivity for CM and a random C_t.
    const double t =
        std::uniform_real_distribution<double>(-2.0, 3.0)(rng);
    for (const CenterParameter param : {CenterParameter{1.0},
                                        CenterParameter{t}}) {
      const std::array<WeightedPoint, 2> parts = {
          WeightedPoint{c_t(q, param, tol), q.signed_area()},
          WeightedPoint{c_t(rr, param, tol), rr.signed_area()}};
      err = std::max(
          err, (combine(parts, tol.eps_area).point - c_t(p, param, tol))
                   .norm());
    }
    record(r, err / p.diameter(), fmt("case %d (n=%d)", i, n));
  }
  return r;
}

CheckResult archimedes_polytope(std::uint64_t seed, int cases) {
  CheckResult r = make_check("archimedes-polytope", 1e-9);
  gen::Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    SimplicialBoundary whole = [&] {
      switch (i % 3) {
        case 0: return gen::random_boundary_3d(rng);
        case 1: return gen::simplex_boundary(gen::random_simplex(rng, 3, 2.5));
        default: return gen::random_boundary_4d(rng);
      }
    }();
    const Tolerance tol = whole.default_tolerance();
    try {
      const auto [q, rest] = gen::random_cone_split(rng, whole);
      const VecN combined = archimedes_combine_polytope(q, rest, tol);
      const VecN direct = ccm_polytope_closed_form(whole, tol);
      record(r, (combined - direct).norm() / whole.diameter(),
             fmt("case %d (dim=%d)", i, whole.dim()));
    } catch (const Error& e) {
      record_fail(r, fmt("case %d: %s", i, e.what()));
    }
  }
  return r;
}

CheckResult archimedes_hidden_triangle() {
  CheckResult r = make_check("archimedes-hidden-triangle", 1e-12);
  const Vec2 a(-1.0, 0.0), b(0.0, 1.0), c(1.0, 0.0), d(0.0, 0.0);
  const OrientedPolygon tri({a, b, c});
  const Vec2 expected(0.0, 0.0);  // midpoint of the hypotenuse

  // Cut from B to A through the altitude foot keeps the flat vertex inside
  // the quadrilateral piece and recovers the center exactly.
  const VertexCut good{1, 0, {d}};
  record(r, (archimedes_combine(tri, good) - expected).norm(), "good cut");

  // Cut from A to C through the foot produces the degenerate piece ADC,
  // which must be reported, not dropped.
  const VertexCut bad{0, 2, {d}};
  try {
    archimedes_combine(tri, bad);
    record_fail(r, "zero-area piece not detected");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ZeroAreaPiece) {
      record_pass(r);
    } else {
      record_fail(r, fmt("wrong error: %s", e.code_name()));
    }
  }

  // Dropping the degenerate triangle would shift the center by 1/2.
  const OrientedPolygon abd({a, b, d});
  const OrientedPolygon dbc({d, b, c});
  const std::array<WeightedPoint, 2> naive = {
      WeightedPoint{ccm_closed_form(abd), abd.signed_area()},
      WeightedPoint{ccm_closed_form(dbc), dbc.signed_area()}};
  const double shift = (combine(naive).point - expected).norm();
  if (shift > 0.4) {
    record_pass(r);
  } else {
    record_fail(r, fmt("naive recombination unexpectedly close: %.3e", shift));
  }
  return r;
}

CheckResult inscribed_planar(std::uint64_t seed, int cases) {
  CheckResult r = make_check("inscribed-planar", 1e-9);
  gen::Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const gen::CyclicPolygon cp = gen::random_cyclic_polygon(rng, 3, 12);
    record(r, (ccm_closed_form(cp.polygon) - cp.center).norm() / cp.radius,
           fmt("case %d (n=%d)", i, cp.polygon.size()));
  }
  return r;
}

CheckResult inscribed_polytope(std::uint64_t seed, int cases) {
  CheckResult r = make_check("inscribed-polytope", 1e-9);
  gen::Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const gen::InscribedPolytope ip = gen::random_inscribed_polytope_3d(rng);
    record(r,
           (ccm_polytope_closed_form(ip.boundary) - ip.center).norm() /
               ip.radius,
           fmt("case %d (facets=%d)", i, ip.boundary.facet_count()));
  }
  return r;
}

CheckResult equilateral_planar(std::uint64_t seed, int cases) {
  CheckResult r = make_check("equilateral-planar", 1e-8);
  gen::Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const OrientedPolygon p = gen::random_equilateral_polygon(rng, 4, 10);
    record(r, (ccm_closed_form(p) - cm_lamina(p)).norm() / p.diameter(),
           fmt("case %d (n=%d)", i, p.size()));
  }
  return r;
}

CheckResult equilateral_spherical(std::uint64_t seed, int cases) {
  CheckResult r = make_check("equilateral-spherical", 1e-8);
  gen::Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const SphericalPolygon p =
        gen::random_equilateral_spherical_polygon(rng, 4, 8);
    const Vec3 ccm_dir = spherical_ccm(p).direction;
    const Vec3 cm_dir = spherical_lamina_cm(p).direction;
    record(r, (ccm_dir - cm_dir).norm() / p.diameter(),
           fmt("case %d (n=%d)", i, p.size()));
  }
  return r;
}

namespace {

// Non-symmetric smooth oval used by the planar continuous-limit check.
double oval_radius(double theta) {
  return 2.0 + 0.4 * std::cos(theta) + 0.25 * std::sin(theta) +
         0.2 * std::cos(2.0 * theta) + 0.15 * std::sin(3.0 * theta);
}

// Lamina centroid of the oval by periodic quadrature of the polar moment
// integrals (independent of the polygon formulas).
Vec2 oval_centroid_oracle(const Vec2& center) {
  const int n = 1 << 14;
  double area = 0.0, mx = 0.0, my = 0.0;
  for (int k = 0; k < n; ++k) {
    const double th = 2.0 * std::numbers::pi * k / n;
    const double rr = oval_radius(th);
    area += 0.5 * rr * rr;
    mx += rr * rr * rr / 3.0 * std::cos(th);
    my += rr * rr * rr / 3.0 * std::sin(th);
  }
  return center + Vec2(mx / area, my / area);
}

double oval_sample_error(const Vec2& center, int n) {
  std::vector<Vec2> samples(n);
  for (int k = 0; k < n; ++k) {
    const double th = 2.0 * std::numbers::pi * k / n;
    samples[k] =
        center + oval_radius(th) * Vec2(std::cos(th), std::sin(th));
  }
  return (curve_ccm(samples) - oval_centroid_oracle(center)).norm();
}

// Colatitude profile of the spherical oval around the north pole.
double cap_colatitude(double theta) {
  return 0.8 + 0.15 * std::cos(theta) + 0.1 * std::sin(2.0 * theta) +
         0.07 * std::cos(3.0 * theta);
}

Vec3 cap_point(double theta) {
  const double rho = cap_colatitude(theta);
  return Vec3(std::sin(rho) * std::cos(theta),
              std::sin(rho) * std::sin(theta), std::cos(rho));
}

// Lamina center of the cap-like domain by quadrature of the surface
// moment integral, reduced analytically in the radial direction.
Vec3 cap_center_oracle() {
  const int n = 1 << 14;
  Vec3 acc = Vec3::Zero();
  for (int k = 0; k < n; ++k) {
    const double th = 2.0 * std::numbers::pi * k / n;
    const double rho = cap_colatitude(th);
    const double ring = 0.5 * (rho - std::sin(rho) * std::cos(rho));
    acc += Vec3(ring * std::cos(th), ring * std::sin(th),
                0.5 * std::sin(rho) * std::sin(rho));
  }
  return acc.normalized();
}

double cap_sample_error(int n) {
  std::vector<Vec3> samples(n);
  for (int k = 0; k < n; ++k) {
    samples[k] = cap_point(2.0 * std::numbers::pi * k / n);
  }
  return (spherical_curve_ccm(samples).direction - cap_center_oracle())
      .norm();
}

void convergence_ratios(CheckResult& r, const std::vector<double>& errs) {
  for (size_t i = 0; i + 1 < errs.size(); ++i) {
    const double ratio = errs[i] / errs[i + 1];
    r.diagnostics.push_back(
        fmt("e(%d)=%.3e ratio=%.3f", 64 << i, errs[i], ratio));
    record(r, std::abs(ratio - 4.0), fmt("ratio %zu", i));
  }
  r.diagnostics.push_back(fmt("e(%d)=%.3e", 64 << (errs.size() - 1),
                              errs.back()));
}

}  // namespace

CheckResult continuous_limit_planar() {
  CheckResult r = make_check("continuous-limit-planar", 0.5);
  const Vec2 center(-1.0, 4.0);
  std::vector<double> errs;
  for (int n : {64, 128, 256, 512}) {
    errs.push_back(oval_sample_error(center, n));
  }
  convergence_ratios(r, errs);
  return r;
}

CheckResult continuous_limit_spherical() {
  CheckResult r = make_check("continuous-limit-spherical", 0.5);
  std::vector<double> errs;
  for (int n : {64, 128, 256, 512}) {
    errs.push_back(cap_sample_error(n));
  }
  convergence_ratios(r, errs);
  return r;
}

CheckResult euler_uniqueness(std::uint64_t seed, int grid, int t_samples) {
  CheckResult r = make_check("euler-uniqueness", 1e-9);
  gen::Rng rng(seed);
  std::vector<double> ts(t_samples);
  for (double& t : ts) {
    t = std::uniform_real_distribution<double>(-2.0, 4.0)(rng);
  }
  const double lo = 0.05;
  const double hi = 0.5 * std::numbers::pi - 0.1;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const double alpha = lo + (hi - lo) * (i + 0.5) / grid;
      const double beta = lo + (hi - lo) * (j + 0.5) / grid;
      const double gamma = 0.5 * std::numbers::pi - alpha - beta;
      if (gamma < lo || gamma > hi) continue;
      double worst = 0.0;
      for (double t : ts) {
        worst = std::max(worst,
                         std::abs(functional_eq_residual(
                             euler_family(CenterParameter{t}), alpha, beta)));
      }
      record(r, worst, fmt("alpha=%.4f beta=%.4f", alpha, beta));
    }
  }
  // The non-member f = tan^2 must be rejected at the witness triple
  // x=1, y=2, z=-1/3.
  const auto tan_sq = [](double a) {
    const double t = std::tan(a);
    return t * t;
  };
  const double witness = std::abs(functional_eq_residual(
      tan_sq, 0.25 * std::numbers::pi, std::atan(2.0)));
  r.diagnostics.push_back(fmt("tan^2 witness residual=%.6f", witness));
  if (witness > 1e-3) {
    record_pass(r);
  } else {
    record_fail(r, fmt("tan^2 witness residual too small: %.3e", witness));
  }
  return r;
}

CheckResult orthocenter_triangles(std::uint64_t seed, int cases) {
  CheckResult r = make_check("orthocenter-triangles", 1e-9);
  gen::Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const Triangle t = gen::random_triangle(rng, 5.0);
    const OrientedPolygon tri({t.a, t.b, t.c});
    const Vec2 c3 = c_t(tri, CenterParameter{3.0});
    // Independent oracle: intersection of the altitudes from a and b.
    Eigen::Matrix2d m;
    m.row(0) = (t.c - t.b).transpose();
    m.row(1) = (t.a - t.c).transpose();
    const Vec2 rhs((t.c - t.b).dot(t.a), (t.a - t.c).dot(t.b));
    const Vec2 oracle = m.partialPivLu().solve(rhs);
    record(r, (c3 - oracle).norm() / tri.diameter(), fmt("case %d", i));
  }
  return r;
}

CheckResult monge_tetrahedra(std::uint64_t seed, int cases) {
  CheckResult r = make_check("monge-tetrahedra", 1e-8);
  gen::Rng rng(seed);
  // Midpoint edge | opposite edge, chosen so the three plane normals
  // V_1 - V_0, V_2 - V_0, V_3 - V_0 are independent.
  const int pairs[3][4] = {{2, 3, 0, 1}, {1, 3, 0, 2}, {1, 2, 0, 3}};
  for (int i = 0; i < cases; ++i) {
    const Simplex s = gen::random_simplex(rng, 3, 2.5);
    const SimplicialBoundary b = gen::simplex_boundary(s);
    const VecN monge = monge_point(b);
    // Oracle: planes through edge midpoints perpendicular to the opposite
    // edges.
    Eigen::Matrix3d m;
    Eigen::Vector3d rhs;
    for (int row = 0; row < 3; ++row) {
      const VecN mid =
          0.5 * (s.vertices[pairs[row][0]] + s.vertices[pairs[row][1]]);
      const VecN dir =
          s.vertices[pairs[row][3]] - s.vertices[pairs[row][2]];
      m.row(row) = Eigen::Vector3d(dir(0), dir(1), dir(2)).transpose();
      rhs(row) = dir.dot(mid);
    }
    const Eigen::Vector3d oracle = m.partialPivLu().solve(rhs);
    const Eigen::Vector3d got(monge(0), monge(1), monge(2));
    record(r, (got - oracle).norm() / b.diameter(), fmt("case %d", i));
  }
  return r;
}

CheckResult symmetry_mirror(std::uint64_t seed, int cases) {
  CheckResult r = make_check("symmetry-mirror", 1e-9);
  gen::Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const gen::MirrorPolygon mp = gen::random_mirror_polygon(rng);
    const SymmetryReport rep =
        symmetry_diagnostics(mp.polygon, mp.axis);
    record(r, *rep.mirror_distance / mp.polygon.diameter(),
           fmt("case %d (n=%d)", i, mp.polygon.size()));
  }
  return r;
}

CheckResult symmetry_rotational(std::uint64_t seed, int cases) {
  CheckResult r = make_check("symmetry-rotational", 1e-9);
  gen::Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const gen::RotSymPolygon rp =
        gen::random_rotationally_symmetric_polygon(rng);
    const EulerLine e = euler_line(rp.polygon);
    if (!e.degenerate) {
      record_fail(r, fmt("case %d: euler line not degenerate", i));
      continue;
    }
    const double err = std::max((e.ccm - rp.center).norm(),
                                (e.cm - rp.center).norm());
    record(r, err / rp.polygon.diameter(),
           fmt("case %d (order=%d)", i, rp.order));
  }
  return r;
}

CheckResult symmetry_odd_side(std::uint64_t seed, int cases) {
  CheckResult r = make_check("symmetry-odd-side", 1e-9);
  gen::Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const OrientedPolygon q = gen::random_three_equal_sides_quad(rng);
    const SymmetryReport rep = symmetry_diagnostics(q);
    if (!rep.odd_side || !rep.odd_side_angle) {
      record_fail(r, fmt("case %d: odd side not identified", i));
      continue;
    }
    if (*rep.odd_side != 3) {
      record_fail(r, fmt("case %d: wrong odd side %d", i, *rep.odd_side));
      continue;
    }
    record(r, std::abs(*rep.odd_side_angle - 0.5 * std::numbers::pi),
           fmt("case %d", i));
  }
  return r;
}

CheckResult spherical_w_independence(std::uint64_t seed, int cases) {
  CheckResult r = make_check("spherical-w-independence", 1e-9);
  gen::Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const SphericalPolygon p = gen::random_spherical_polygon(rng, 3, 9);
    const Vec3 direct = spherical_ccm(p).direction;
    double err = 0.0;
    for (int k = 0; k < 3; ++k) {
      const Vec3 w = gen::random_unit_vector(rng);
      err = std::max(
          err, (spherical_ccm_fan(p, w).direction - direct).norm());
    }
    record(r, err, fmt("case %d (n=%d)", i, p.size()));
  }
  return r;
}

CheckResult spherical_flat_limit() {
  // err(delta) <= bound * delta^2 for both sizes, with observed decay.
  CheckResult r = make_check("spherical-flat-limit", 0.05);
  const std::vector<Vec2> shape = {Vec2(0.9, 0.1), Vec2(0.2, 0.8),
                                   Vec2(-0.7, 0.5), Vec2(-0.8, -0.6),
                                   Vec2(0.4, -0.9)};
  std::vector<double> errs;
  for (const double delta : {1e-2, 1e-3}) {
    std::vector<Vec2> flat;
    std::vector<Vec3> sphere;
    for (const Vec2& u : shape) {
      const Vec2 w = delta * u;
      flat.push_back(w);
      sphere.push_back(Vec3(w.x(), w.y(), 1.0).normalized());
    }
    const Vec2 planar = ccm_closed_form(OrientedPolygon(flat));
    const Vec3 dir = spherical_ccm(SphericalPolygon(sphere)).direction;
    const Vec2 projected(dir.x() / dir.z(), dir.y() / dir.z());
    const double err = (projected - planar).norm();
    errs.push_back(err);
    r.diagnostics.push_back(fmt("delta=%.0e err=%.3e err/delta^2=%.3e",
                                delta, err, err / (delta * delta)));
    record(r, err / (delta * delta), fmt("delta=%.0e", delta));
  }
  if (errs[0] > errs[1]) {
    record_pass(r);
  } else {
    record_fail(r, "no decay between delta=1e-2 and 1e-3");
  }
  return r;
}

CheckResult hyperbolic_witnesses() {
  CheckResult r = make_check("hyperbolic-witnesses", 1e-9);
  auto on_hyperboloid = [](double x, double y) {
    return Vec3(x, y, std::sqrt(1.0 + x * x + y * y));
  };
  // Horizontal plane section: a circle; time-like normal.
  std::vector<Vec3> timelike;
  const double rr = std::sinh(0.8);
  for (double th : {0.3, 2.0, 4.4}) {
    timelike.push_back(on_hyperboloid(rr * std::cos(th), rr * std::sin(th)));
  }
  // Vertical plane x = 0.6: an equidistant curve; space-like normal.
  std::vector<Vec3> spacelike;
  for (double y : {-1.2, 0.1, 1.5}) {
    spacelike.push_back(on_hyperboloid(0.6, y));
  }
  // Plane z - x = 1 tangent to the null cone: a horocycle.
  std::vector<Vec3> nullcase;
  for (double y : {-1.0, 0.2, 1.3}) {
    const double zpx = 1.0 + y * y;  // z + x for c = 1
    const double x = 0.5 * (zpx - 1.0);
    nullcase.push_back(Vec3(x, y, x + 1.0));
  }

  const MinkowskiCcm t = minkowski_ccm(timelike);
  if (t.cls == MinkowskiClass::TimeLike && t.h2_point &&
      std::abs(minkowski_form(*t.h2_point) - 1.0) < 1e-9 &&
      t.h2_point->z() > 0.0) {
    record_pass(r);
  } else {
    record_fail(r, fmt("timelike witness classified %s",
                       minkowski_class_name(t.cls)));
  }
  const MinkowskiCcm sp = minkowski_ccm(spacelike);
  if (sp.cls == MinkowskiClass::SpaceLike) {
    record_pass(r);
  } else {
    record_fail(r, fmt("spacelike witness classified %s",
                       minkowski_class_name(sp.cls)));
  }
  const MinkowskiCcm nu = minkowski_ccm(nullcase);
  r.max_err = std::abs(minkowski_form(nu.vector)) /
              nu.vector.squaredNorm();
  if (nu.cls == MinkowskiClass::Null) {
    record_pass(r);
  } else {
    record_fail(r, fmt("null witness classified %s",
                       minkowski_class_name(nu.cls)));
  }

  // Sign stability away from the null case under 1e-10 perturbations.
  gen::Rng rng(12345);
  std::normal_distribution<double> g(0.0, 1.0);
  auto perturb = [&](const std::vector<Vec3>& pts) {
    std::vector<Vec3> out;
    for (const Vec3& v : pts) {
      const double x = v.x() + 1e-10 * g(rng);
      const double y = v.y() + 1e-10 * g(rng);
      out.push_back(on_hyperboloid(x, y));
    }
    return out;
  };
  for (int k = 0; k < 8; ++k) {
    if (minkowski_ccm(perturb(timelike)).cls != MinkowskiClass::TimeLike) {
      record_fail(r, "timelike classification unstable");
    } else {
      record_pass(r);
    }
    if (minkowski_ccm(perturb(spacelike)).cls != MinkowskiClass::SpaceLike) {
      record_fail(r, "spacelike classification unstable");
    } else {
      record_pass(r);
    }
  }
  return r;
}

CheckResult dimension_consistency(std::uint64_t seed, int cases) {
  CheckResult r = make_check("dimension-consistency", 1e-11);
  gen::Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const OrientedPolygon p = gen::random_polygon(rng, 3, 10, 5.0);
    const SimplicialBoundary b = polygon_boundary(p);
    const double t =
        std::uniform_real_distribution<double>(-2.0, 3.0)(rng);
    auto to2 = [](const VecN& v) { return Vec2(v(0), v(1)); };
    double err = (to2(ccm_polytope_closed_form(b)) - ccm_closed_form(p))
                     .norm();
    err = std::max(err, (to2(cm_polytope(b)) - cm_lamina(p)).norm());
    err = std::max(err, (to2(c_t_polytope(b, CenterParameter{t})) -
                         c_t(p, CenterParameter{t}))
                            .norm());
    record(r, err / p.diameter(), fmt("case %d (n=%d)", i, p.size()));
  }
  return r;
}

std::vector<std::string> suite_names() {
  return {"o-independence", "archimedes",       "inscribed",
          "equilateral",    "continuous-limit", "euler-uniqueness",
          "spherical",      "polytope",         "symmetry"};
}

SuiteReport run_suite(const std::string& suite, std::uint64_t seed,
                      int cases) {
  SuiteReport report;
  report.suite = suite;
  const int half = std::max(1, cases / 2);
  const int quarter = std::max(1, cases / 4);
  if (suite == "o-independence") {
    report.checks.push_back(planar_o_independence(seed, cases));
    report.checks.push_back(polytope_o_independence(seed + 1, half));
    report.checks.push_back(planar_closed_vs_fan(seed + 2, cases));
    report.checks.push_back(polytope_closed_vs_fan(seed + 3, half));
  } else if (suite == "archimedes") {
    report.checks.push_back(archimedes_planar(seed, cases));
    report.checks.push_back(archimedes_polytope(seed + 1, quarter));
    report.checks.push_back(archimedes_hidden_triangle());
  } else if (suite == "inscribed") {
    report.checks.push_back(inscribed_planar(seed, cases));
    report.checks.push_back(inscribed_polytope(seed + 1, quarter));
  } else if (suite == "equilateral") {
    report.checks.push_back(equilateral_planar(seed, cases));
    report.checks.push_back(equilateral_spherical(seed + 1, half));
  } else if (suite == "continuous-limit") {
    report.checks.push_back(continuous_limit_planar());
    report.checks.push_back(continuous_limit_spherical());
  } else if (suite == "euler-uniqueness") {
    report.checks.push_back(
        euler_uniqueness(seed, 50, std::max(1, cases / 25)));
  } else if (suite == "spherical") {
    report.checks.push_back(spherical_w_independence(seed, cases));
    report.checks.push_back(equilateral_spherical(seed + 1, half));
    report.checks.push_back(spherical_flat_limit());
  } else if (suite == "polytope") {
    report.checks.push_back(polytope_o_independence(seed, half));
    report.checks.push_back(polytope_closed_vs_fan(seed + 1, half));
    report.checks.push_back(monge_tetrahedra(seed + 2, half));
    report.checks.push_back(dimension_consistency(seed + 3, half));
  } else if (suite == "symmetry") {
    report.checks.push_back(symmetry_mirror(seed, cases));
    report.checks.push_back(symmetry_rotational(seed + 1, cases));
    report.checks.push_back(symmetry_odd_side(seed + 2, cases));
  } else {
    throw Error(ErrorCode::UnknownSuite, "unknown suite '" + suite + "'");
  }
  return report;
}

std::string format_report(const SuiteReport& report) {
  std::ostringstream out;
  for (const CheckResult& c : report.checks) {
    out << (c.passed() ? "PASS" : "FAIL") << " " << c.name << " cases="
        << c.cases << " failures=" << c.failures
        << fmt(" max_err=%.3e bound=%.3e", c.max_err, c.bound) << "\n";
    for (const std::string& d : c.diagnostics) {
      out << "  " << d << "\n";
    }
  }
  out << "suite " << report.suite << ": "
      << (report.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace ccm::verify
