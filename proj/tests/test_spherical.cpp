#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "ccm/generators.hpp"
#include "ccm/spherical.hpp"
#include "support/oracles.hpp"

using namespace ccm;

namespace {

std::mt19937_64 rng(777);

double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

bool near3(const Vec3& a, const Vec3& b, double tol = 1e-12) {
  return (a - b).norm() <= tol;
}

// Well-separated random spherical triangle.
std::array<Vec3, 3> random_sph_triangle() {
  for (;;) {
    const Vec3 a = gen::random_unit_vector(rng);
    const Vec3 b = gen::random_unit_vector(rng);
    const Vec3 c = gen::random_unit_vector(rng);
    if (spherical_circumcenter_raw(a, b, c).norm() > 0.3 &&
        a.dot(b) > -0.8 && b.dot(c) > -0.8 && c.dot(a) > -0.8) {
      return {a, b, c};
    }
  }
}

}  // namespace

TEST_CASE("circumcenter of the octant triangle") {
  const Vec3 e1(1, 0, 0), e2(0, 1, 0), e3(0, 0, 1);
  const MassedDirection cc = spherical_circumcenter(e1, e2, e3);
  CHECK(near3(cc.direction, Vec3(1, 1, 1).normalized(), 1e-14));
  CHECK(cc.mass == doctest::Approx(std::sqrt(3.0)));

  // Reversed order flips the direction.
  const MassedDirection rev = spherical_circumcenter(e1, e3, e2);
  CHECK(near3(rev.direction, -Vec3(1, 1, 1).normalized(), 1e-14));
}

TEST_CASE("circumcenter is equidistant in arc length") {
  for (int i = 0; i < 50; ++i) {
    const auto [a, b, c] = random_sph_triangle();
    const MassedDirection cc = spherical_circumcenter(a, b, c);
    const double da = spherical_distance(cc.direction, a);
    CHECK(spherical_distance(cc.direction, b) == doctest::Approx(da));
    CHECK(spherical_distance(cc.direction, c) == doctest::Approx(da));
  }
}

TEST_CASE("degenerate circumcircle configurations are refused") {
  const Vec3 a(1, 0, 0), b(0, 1, 0);
  CHECK_THROWS_AS(spherical_circumcenter(a, a, b), Error);
  CHECK_THROWS_AS(
      spherical_circumcenter(Vec3(2, 0, 0), a, b), Error);  // not unit
}

TEST_CASE("spherical mass center") {
  const Vec3 e1(1, 0, 0), e2(0, 1, 0);
  const std::vector<MassedDirection> pair = {{e1, 1.0}, {e2, 1.0}};
  const MassedDirection mc = spherical_mass_center(pair);
  CHECK(near3(mc.direction, Vec3(1, 1, 0).normalized(), 1e-14));
  CHECK(mc.mass == doctest::Approx(std::sqrt(2.0)));

  const std::vector<MassedDirection> balanced = {{e1, 2.0}, {-e1, 2.0}};
  CHECK_THROWS_AS(spherical_mass_center(balanced), Error);

  // Associativity: combining two then the third equals the flat sum.
  for (int i = 0; i < 30; ++i) {
    const std::vector<MassedDirection> pts = {
        {gen::random_unit_vector(rng), uniform(0.2, 2.0)},
        {gen::random_unit_vector(rng), uniform(0.2, 2.0)},
        {gen::random_unit_vector(rng), uniform(0.2, 2.0)}};
    MassedDirection head;
    try {
      const std::vector<MassedDirection> two = {pts[0], pts[1]};
      head = spherical_mass_center(two);
    } catch (const Error&) {
      continue;  // balanced pair, skip
    }
    const std::vector<MassedDirection> nested = {head, pts[2]};
    const MassedDirection lhs = spherical_mass_center(nested);
    const MassedDirection rhs = spherical_mass_center(pts);
    CHECK(near3(lhs.direction, rhs.direction, 1e-12));
    CHECK(lhs.mass == doctest::Approx(rhs.mass));
  }
}

TEST_CASE("octant lamina center of mass") {
  const Vec3 e1(1, 0, 0), e2(0, 1, 0), e3(0, 0, 1);
  const MassedDirection cm = spherical_triangle_lamina_cm(e1, e2, e3);
  CHECK(near3(cm.direction, Vec3(1, 1, 1).normalized(), 1e-14));
  // Weights d/sin d = pi/2 on every side.
  CHECK(cm.mass ==
        doctest::Approx(0.5 * std::numbers::pi * std::sqrt(3.0)));
}

TEST_CASE("tiny lamina approaches the flat triangle") {
  // Flat-limit oracle: a triangle of diameter ~1e-3 near the pole. The
  // direction approaches the flat centroid direction and the mass twice
  // the flat area (the lamina vector is twice the moment integral).
  const double d = 1e-3;
  const Vec2 q0(0.31 * d, 0.17 * d), q1(-0.42 * d, 0.26 * d),
      q2(0.05 * d, -0.37 * d);
  auto lift = [](const Vec2& q) {
    return Vec3(q.x(), q.y(), 1.0).normalized();
  };
  const MassedDirection cm =
      spherical_triangle_lamina_cm(lift(q0), lift(q1), lift(q2));
  const Vec2 centroid = (q0 + q1 + q2) / 3.0;
  const Vec3 centroid_dir = Vec3(centroid.x(), centroid.y(), 1.0).normalized();
  CHECK(near3(cm.direction, centroid_dir, 1e-6));
  const double flat_area = 0.5 * std::abs(cross2(q1 - q0, q2 - q0));
  CHECK(cm.mass == doctest::Approx(2.0 * flat_area).epsilon(1e-5));
}

TEST_CASE("lamina vector matches the surface moment integral") {
  for (int i = 0; i < 6; ++i) {
    const auto [a, b, c] = random_sph_triangle();
    const Vec3 raw = spherical_triangle_lamina_raw(a, b, c);
    const Vec3 moment = oracles::spherical_triangle_moment(a, b, c, 200);
    // The lamina vector is twice the moment integral of the region.
    CHECK(near3(raw, 2.0 * moment, 2e-4 * raw.norm()));
  }
}

TEST_CASE("antipodal lamina vertices are refused") {
  const Vec3 e1(1, 0, 0), e3(0, 0, 1);
  CHECK_THROWS_AS(spherical_triangle_lamina_cm(e1, -e1, e3), Error);
  try {
    spherical_triangle_lamina_cm(e1, -e1, e3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AntipodalPair);
  }
}

TEST_CASE("spherical polygon construction") {
  CHECK_THROWS_AS(
      SphericalPolygon({Vec3(1, 0, 0), Vec3(0, 1, 0)}), Error);
  CHECK_THROWS_AS(SphericalPolygon({Vec3(1, 0, 0), Vec3(-1, 0, 0),
                                    Vec3(0, 1, 0)}),
                  Error);
  CHECK_THROWS_AS(SphericalPolygon({Vec3(2, 0, 0), Vec3(0, 1, 0),
                                    Vec3(0, 0, 1)}),
                  Error);
}

TEST_CASE("spherical square centers on its pole") {
  const double theta = 0.7;
  std::vector<Vec3> verts;
  for (int k = 0; k < 4; ++k) {
    const double lon = 0.5 * std::numbers::pi * k;
    verts.emplace_back(std::sin(theta) * std::cos(lon),
                       std::sin(theta) * std::sin(lon), std::cos(theta));
  }
  const MassedDirection ccm = spherical_ccm(SphericalPolygon(verts));
  CHECK(near3(ccm.direction, Vec3(0, 0, 1), 1e-14));
}

TEST_CASE("equilateral spherical polygons: ccm equals lamina cm") {
  for (int i = 0; i < 8; ++i) {
    const SphericalPolygon p =
        gen::random_equilateral_spherical_polygon(rng, 4, 7);
    const Vec3 ccm = spherical_ccm(p).direction;
    const Vec3 cm = spherical_lamina_cm(p).direction;
    CHECK(near3(ccm, cm, 1e-8 * p.diameter()));
  }
}

TEST_CASE("lamina fan apex independence") {
  // The apex terms of the lamina fan cancel pairwise, so any admissible
  // apex yields the same center of mass.
  for (int i = 0; i < 20; ++i) {
    const SphericalPolygon p = gen::random_spherical_polygon(rng, 3, 8);
    const Vec3 base = spherical_lamina_cm(p, p.vertex(0)).direction;
    for (int k = 0; k < 3; ++k) {
      const Vec3 w = gen::random_unit_vector(rng);
      try {
        CHECK(near3(spherical_lamina_cm(p, w).direction, base, 1e-10));
      } catch (const Error&) {
        continue;  // apex antipodal to a vertex
      }
    }
  }
}

TEST_CASE("fan apex independence") {
  for (int i = 0; i < 25; ++i) {
    const SphericalPolygon p = gen::random_spherical_polygon(rng, 3, 9);
    const Vec3 direct = spherical_ccm(p).direction;
    for (int k = 0; k < 3; ++k) {
      const Vec3 w = gen::random_unit_vector(rng);
      CHECK(near3(spherical_ccm_fan(p, w).direction, direct, 1e-9));
    }
  }
}

TEST_CASE("the fan telescopes exactly as a vector identity") {
  for (int i = 0; i < 25; ++i) {
    const SphericalPolygon p = gen::random_spherical_polygon(rng, 3, 8);
    const Vec3 w = gen::random_unit_vector(rng);
    Vec3 fan_sum = Vec3::Zero();
    Vec3 direct_sum = Vec3::Zero();
    for (int k = 0; k < p.size(); ++k) {
      fan_sum += spherical_circumcenter_raw(w, p.vertex(k), p.vertex(k + 1));
      direct_sum += p.vertex(k).cross(p.vertex(k + 1));
    }
    CHECK(near3(fan_sum, direct_sum, 1e-13));
  }
}

TEST_CASE("ccm is rotation equivariant") {
  for (int i = 0; i < 20; ++i) {
    const SphericalPolygon p = gen::random_spherical_polygon(rng, 3, 8);
    // Random rotation from the unit-vector generator.
    const Vec3 axis = gen::random_unit_vector(rng);
    const double angle = uniform(0, 2 * std::numbers::pi);
    Eigen::Matrix3d rot =
        Eigen::AngleAxisd(angle, axis).toRotationMatrix();
    std::vector<Vec3> moved;
    for (const Vec3& v : p.vertices()) moved.push_back(rot * v);
    const Vec3 lhs = spherical_ccm(SphericalPolygon(moved)).direction;
    const Vec3 rhs = rot * spherical_ccm(p).direction;
    CHECK(near3(lhs, rhs, 1e-12));
  }
}

TEST_CASE("balanced polygons have no circumcenter of mass") {
  const Vec3 e1(1, 0, 0), e2(0, 1, 0);
  // Traverses a great circle forward and back: the cross sum vanishes.
  const SphericalPolygon degenerate({e1, e2, -e1, e2});
  CHECK_THROWS_AS(spherical_ccm(degenerate), Error);
  try {
    spherical_ccm(degenerate);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegeneratePolygon);
  }
}

TEST_CASE("sampled spherical circles center on their axis") {
  std::vector<Vec3> samples(256);
  const double theta = 0.9;
  for (int k = 0; k < 256; ++k) {
    const double lon = 2 * std::numbers::pi * k / 256;
    samples[k] = Vec3(std::sin(theta) * std::cos(lon),
                      std::sin(theta) * std::sin(lon), std::cos(theta));
  }
  CHECK(near3(spherical_curve_ccm(samples).direction, Vec3(0, 0, 1),
              1e-12));

  // Small circle about a random axis.
  const Vec3 axis = gen::random_unit_vector(rng);
  Vec3 u = axis.cross(std::abs(axis.z()) < 0.9 ? Vec3(0, 0, 1)
                                               : Vec3(1, 0, 0));
  u.normalize();
  const Vec3 v = axis.cross(u);
  std::vector<Vec3> small(128);
  for (int k = 0; k < 128; ++k) {
    const double lon = 2 * std::numbers::pi * k / 128;
    small[k] = std::cos(0.3) * axis +
               std::sin(0.3) * (std::cos(lon) * u + std::sin(lon) * v);
  }
  CHECK(near3(spherical_curve_ccm(small).direction, axis, 1e-12));

  CHECK_THROWS_AS(spherical_curve_ccm(std::vector<Vec3>(8, axis)), Error);
}

TEST_CASE("generalized cross product") {
  auto vecn = [](std::initializer_list<double> xs) {
    VecN v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) v(i++) = x;
    return v;
  };
  const std::vector<VecN> basis = {vecn({1, 0, 0}), vecn({0, 1, 0})};
  CHECK((generalized_cross(basis) - vecn({0, 0, 1})).norm() < 1e-15);

  const std::vector<VecN> dependent = {vecn({1, 2, 3}), vecn({2, 4, 6})};
  CHECK(generalized_cross(dependent).norm() < 1e-14);

  // Determinant identity and alternation for n in {3, 4, 5}.
  for (int n : {3, 4, 5}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<VecN> vs(n);
      for (VecN& v : vs) {
        v.resize(n + 1);
        for (int i = 0; i <= n; ++i) v(i) = uniform(-2, 2);
      }
      const VecN cross = generalized_cross(vs);
      for (int reps = 0; reps < 3; ++reps) {
        VecN xi(n + 1);
        for (int i = 0; i <= n; ++i) xi(i) = uniform(-2, 2);
        Eigen::MatrixXd m(n + 1, n + 1);
        for (int j = 0; j < n; ++j) m.col(j) = vs[j];
        m.col(n) = xi;
        CHECK(std::abs(m.determinant() - cross.dot(xi)) <
              1e-10 * (1.0 + std::abs(cross.dot(xi))));
      }
      std::vector<VecN> swapped = vs;
      std::swap(swapped[0], swapped[1]);
      CHECK((generalized_cross(swapped) + cross).norm() <
            1e-12 * (1.0 + cross.norm()));
    }
  }
}

TEST_CASE("spherical polytope boundary on S2 matches the polygon route") {
  const Vec3 e1(1, 0, 0), e2(0, 1, 0), e3(0, 0, 1);
  SphericalBoundary b;
  b.sphere_dim = 2;
  for (const Vec3& v : {e1, e2, e3}) {
    VecN w(3);
    w << v.x(), v.y(), v.z();
    b.vertices.push_back(w);
  }
  b.facets = {{0, 1}, {1, 2}, {2, 0}};
  const MassedDirectionN md = spherical_ccm_polytope(b);
  CHECK(std::abs(md.direction(0) - 1 / std::sqrt(3.0)) < 1e-14);
  CHECK(std::abs(md.direction(1) - 1 / std::sqrt(3.0)) < 1e-14);
  CHECK(std::abs(md.direction(2) - 1 / std::sqrt(3.0)) < 1e-14);
  CHECK(md.mass == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("equatorial cap boundary on S3 points along the axis") {
  // Boundary of the northern cap of S^3: the equatorial S^2 triangulated
  // by the octahedron, facets oriented consistently.
  SphericalBoundary b;
  b.sphere_dim = 3;
  auto push = [&](double x, double y, double z) {
    VecN v(4);
    v << x, y, z, 0.0;
    b.vertices.push_back(v);
  };
  push(1, 0, 0);
  push(-1, 0, 0);
  push(0, 1, 0);
  push(0, -1, 0);
  push(0, 0, 1);
  push(0, 0, -1);
  for (int sx = 0; sx < 2; ++sx) {
    for (int sy = 0; sy < 2; ++sy) {
      for (int sz = 0; sz < 2; ++sz) {
        std::vector<int> f = {sx, 2 + sy, 4 + sz};
        std::vector<VecN> fv;
        for (int idx : f) fv.push_back(b.vertices[idx]);
        if (generalized_cross(fv)(3) < 0.0) std::swap(f[0], f[1]);
        b.facets.push_back(f);
      }
    }
  }
  const MassedDirectionN md = spherical_ccm_polytope(b);
  CHECK(std::abs(md.direction(3)) == doctest::Approx(1.0));
}

TEST_CASE("hyperboloid polygons classify under the minkowski form") {
  auto lift = [](double x, double y) {
    return Vec3(x, y, std::sqrt(1.0 + x * x + y * y));
  };
  // Rotationally symmetric about the z axis: a circle, time-like.
  std::vector<Vec3> sym;
  const double r = std::sinh(0.9);
  for (int k = 0; k < 5; ++k) {
    const double th = 2 * std::numbers::pi * k / 5;
    sym.push_back(lift(r * std::cos(th), r * std::sin(th)));
  }
  const MinkowskiCcm tl = minkowski_ccm(sym);
  CHECK(tl.cls == MinkowskiClass::TimeLike);
  REQUIRE(tl.h2_point.has_value());
  CHECK(near3(*tl.h2_point, Vec3(0, 0, 1), 1e-12));

  // Vertical plane section x = 0.6: an equidistant curve, space-like.
  std::vector<Vec3> steep = {lift(0.6, -1.2), lift(0.6, 0.1),
                             lift(0.6, 1.5)};
  CHECK(minkowski_ccm(steep).cls == MinkowskiClass::SpaceLike);

  // Plane z - x = 1 tangent to the null cone: a horocycle.
  std::vector<Vec3> tangent;
  for (double y : {-1.0, 0.2, 1.3}) {
    const double zpx = 1.0 + y * y;
    const double x = 0.5 * (zpx - 1.0);
    tangent.push_back(Vec3(x, y, x + 1.0));
  }
  CHECK(minkowski_ccm(tangent).cls == MinkowskiClass::Null);

  CHECK_THROWS_AS(minkowski_ccm(std::vector<Vec3>{
                      Vec3(0, 0, 2), lift(1, 0), lift(0, 1)}),
                  Error);
}

TEST_CASE("gnomonic flat limit of small spherical polygons") {
  // O(delta^2) agreement with the planar center under gnomonic projection.
  const std::vector<Vec2> shape = {Vec2(0.9, 0.1), Vec2(0.2, 0.8),
                                   Vec2(-0.7, 0.5), Vec2(-0.8, -0.6),
                                   Vec2(0.4, -0.9)};
  double previous = 1.0;
  for (double delta : {1e-1, 1e-2, 1e-3}) {
    std::vector<Vec2> flat;
    std::vector<Vec3> sphere;
    for (const Vec2& u : shape) {
      flat.push_back(delta * u);
      sphere.push_back(
          Vec3(delta * u.x(), delta * u.y(), 1.0).normalized());
    }
    const Vec2 planar = ccm_closed_form(OrientedPolygon(flat));
    const Vec3 dir = spherical_ccm(SphericalPolygon(sphere)).direction;
    const Vec2 projected(dir.x() / dir.z(), dir.y() / dir.z());
    const double err = (projected - planar).norm();
    CHECK(err < 0.05 * delta * delta);
    CHECK(err < previous);
    previous = err;
  }
}
