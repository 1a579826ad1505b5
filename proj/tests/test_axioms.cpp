#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "ccm/axioms.hpp"
#include "ccm/planar.hpp"

using namespace ccm;

namespace {

std::mt19937_64 rng(31337);

double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Admissible angle away from the tangent/cotangent poles.
double random_angle() { return uniform(0.05, 0.5 * std::numbers::pi - 0.1); }

// An (alpha, beta) pair whose third angle is admissible too.
std::pair<double, double> random_triple() {
  for (;;) {
    const double a = random_angle();
    const double b = random_angle();
    const double c = 0.5 * std::numbers::pi - a - b;
    if (c > 0.05 && c < 0.5 * std::numbers::pi - 0.1) return {a, b};
  }
}

}  // namespace

TEST_CASE("euler family heights at the equilateral angle") {
  const double third = std::numbers::pi / 3.0;
  CHECK(euler_family_height(CenterParameter{1.0}, third) ==
        doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(euler_family_height(CenterParameter{0.0}, third) ==
        doctest::Approx(1.0 / std::sqrt(3.0)));
  for (int i = 0; i < 20; ++i) {
    CHECK(euler_family_height(CenterParameter{uniform(-3, 4)}, third) ==
          doctest::Approx(1.0 / std::sqrt(3.0)));
  }
}

TEST_CASE("euler family endpoints: lamina center and circumcenter") {
  for (int i = 0; i < 30; ++i) {
    const double alpha = random_angle();
    CHECK(euler_family_height(CenterParameter{1.0}, alpha) ==
          doctest::Approx(std::tan(alpha) / 3.0));
    CHECK(euler_family_height(CenterParameter{0.0}, alpha) ==
          doctest::Approx(-std::cos(2 * alpha) / std::sin(2 * alpha)));
  }
  // cot(2a) has no pole at pi/4; the genuine poles are the interval ends.
  CHECK(euler_family_height(CenterParameter{0.0}, 0.25 * std::numbers::pi) ==
        doctest::Approx(0.0));
  CHECK_THROWS_AS(euler_family_height(CenterParameter{0.0}, 1e-14), Error);
  CHECK_THROWS_AS(
      euler_family_height(CenterParameter{0.0},
                          0.5 * std::numbers::pi - 1e-14),
      Error);
}

TEST_CASE("heights agree with the planar centers on isosceles triangles") {
  for (int i = 0; i < 50; ++i) {
    const double alpha = uniform(0.15, 1.35);
    const double t = uniform(-2, 3);
    const OrientedPolygon tri(
        {Vec2(-1, 0), Vec2(1, 0), Vec2(0, std::tan(alpha))});
    const Vec2 center = c_t(tri, CenterParameter{t});
    CHECK(std::abs(center.x()) < 1e-12);
    CHECK(center.y() ==
          doctest::Approx(euler_family_height(CenterParameter{t}, alpha))
              .epsilon(1e-9));
  }
}

TEST_CASE("kite heights") {
  for (int i = 0; i < 20; ++i) {
    const double alpha = random_angle();
    CHECK(kite_height(euler_family(CenterParameter{uniform(-2, 3)}), alpha,
                      alpha) == doctest::Approx(0.0));
  }
  CHECK(kite_height(euler_family(CenterParameter{0.0}),
                    0.25 * std::numbers::pi,
                    0.25 * std::numbers::pi) == doctest::Approx(0.0));
  CHECK_THROWS_AS(
      kite_height([](double a) { return std::tan(a) / 3.0; }, 0.3, -0.3),
      Error);
}

TEST_CASE("kite heights match the planar centers on explicit kites") {
  for (int i = 0; i < 40; ++i) {
    const double alpha = uniform(0.2, 1.2);
    const double beta = uniform(0.2, 1.2);
    const double t = uniform(-1, 2);
    const OrientedPolygon kite({Vec2(1, 0), Vec2(0, std::tan(alpha)),
                                Vec2(-1, 0), Vec2(0, -std::tan(beta))});
    const Vec2 center = c_t(kite, CenterParameter{t});
    CHECK(std::abs(center.x()) < 1e-12);
    CHECK(center.y() ==
          doctest::Approx(
              kite_height(euler_family(CenterParameter{t}), alpha, beta))
              .epsilon(1e-9));
  }
}

TEST_CASE("the euler family satisfies the functional equation") {
  for (int i = 0; i < 100; ++i) {
    const auto [alpha, beta] = random_triple();
    const double t = uniform(-2, 4);
    CHECK(std::abs(functional_eq_residual(euler_family(CenterParameter{t}),
                                          alpha, beta)) < 1e-10);
  }
}

TEST_CASE("monomial height functions under the tangent substitution") {
  // In the g(x) = x f(arctan x) picture, g = 1 and g = x^2 annihilate the
  // residual identically: f = cot(alpha) and f = tan(alpha).
  const HeightFunction f_cot = [](double a) { return 1.0 / std::tan(a); };
  const HeightFunction f_tan = [](double a) { return std::tan(a); };
  // The degree-1 and degree-3 brackets cancel only jointly: g = x + x^3,
  // i.e. f = sec^2, also annihilates the residual on the constraint
  // surface, while each half alone does not. A constant f (g = c x) is
  // therefore not a solution.
  const HeightFunction f_sec2 = [](double a) {
    const double t = std::tan(a);
    return 1.0 + t * t;
  };
  for (int i = 0; i < 40; ++i) {
    const auto [alpha, beta] = random_triple();
    CHECK(std::abs(functional_eq_residual(f_cot, alpha, beta)) < 1e-10);
    CHECK(std::abs(functional_eq_residual(f_tan, alpha, beta)) < 1e-10);
    CHECK(std::abs(functional_eq_residual(f_sec2, alpha, beta)) < 1e-10);
  }
  // At the witness triple the constant function's residual is -c * 14/15.
  const double witness = functional_eq_residual(
      [](double) { return 1.0; }, 0.25 * std::numbers::pi, std::atan(2.0));
  CHECK(witness == doctest::Approx(-14.0 / 15.0));
}

TEST_CASE("the functional equation residual is linear in f") {
  for (int i = 0; i < 30; ++i) {
    const auto [alpha, beta] = random_triple();
    const HeightFunction f1 = [](double a) { return std::sin(a); };
    const HeightFunction f2 = [](double a) { return a * a; };
    const HeightFunction sum = [&](double a) { return f1(a) + f2(a); };
    const double lhs = functional_eq_residual(sum, alpha, beta);
    const double rhs = functional_eq_residual(f1, alpha, beta) +
                       functional_eq_residual(f2, alpha, beta);
    CHECK(std::abs(lhs - rhs) < 1e-11);
  }
}

TEST_CASE("tan^2 fails the functional equation at the witness triple") {
  const HeightFunction tan_sq = [](double a) {
    const double t = std::tan(a);
    return t * t;
  };
  // x = 1, y = 2, z = -1/3: the residual is 14/15.
  const double residual = functional_eq_residual(
      tan_sq, 0.25 * std::numbers::pi, std::atan(2.0));
  CHECK(residual == doctest::Approx(14.0 / 15.0));
  CHECK(std::abs(residual) > 1e-3);
}

TEST_CASE("residual vanishes on the admissible grid") {
  double worst = 0.0;
  const double lo = 0.05, hi = 0.5 * std::numbers::pi - 0.1;
  for (int i = 0; i < 50; ++i) {
    for (int j = 0; j < 50; ++j) {
      const double alpha = lo + (hi - lo) * (i + 0.5) / 50;
      const double beta = lo + (hi - lo) * (j + 0.5) / 50;
      const double gamma = 0.5 * std::numbers::pi - alpha - beta;
      if (gamma < lo || gamma > hi) continue;
      for (double t : {-1.5, 0.0, 1.0, 2.5}) {
        worst = std::max(worst, std::abs(functional_eq_residual(
                                    euler_family(CenterParameter{t}),
                                    alpha, beta)));
      }
    }
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("tangent substitution") {
  CHECK(tangent_substitution(std::numbers::pi / 6.0,
                             std::numbers::pi / 6.0) ==
        doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(tangent_substitution(0.25 * std::numbers::pi, std::atan(2.0)) ==
        doctest::Approx(-1.0 / 3.0));
  for (int i = 0; i < 50; ++i) {
    const double alpha = random_angle();
    const double beta = random_angle();
    CHECK(tangent_substitution(alpha, beta) ==
          doctest::Approx(std::tan(0.5 * std::numbers::pi - alpha - beta))
              .epsilon(1e-10));
  }
  CHECK_THROWS_AS(tangent_substitution(0.4, -0.4), Error);
}

TEST_CASE("altitude identity spot check") {
  // d_A/h_A + d_B/h_B + d_C/h_C = 0 for signed distances to the oriented
  // altitudes of any triangle, at any point.
  auto altitude = [](const Vec2& from, const Vec2& u,
                     const Vec2& v) -> Vec2 {
    // Foot of the perpendicular from `from` onto line (u, v).
    const Vec2 d = (v - u).normalized();
    return u + d.dot(from - u) * d;
  };
  for (int i = 0; i < 50; ++i) {
    const Vec2 a(uniform(-3, 3), uniform(-3, 3));
    const Vec2 b(uniform(-3, 3), uniform(-3, 3));
    const Vec2 c(uniform(-3, 3), uniform(-3, 3));
    if (std::abs(signed_area({a, b, c})) < 0.3) continue;
    const Vec2 x(uniform(-4, 4), uniform(-4, 4));
    double sum = 0.0;
    const Vec2 verts[3] = {a, b, c};
    for (int k = 0; k < 3; ++k) {
      const Vec2 from = verts[k];
      const Vec2 u = verts[(k + 1) % 3];
      const Vec2 v = verts[(k + 2) % 3];
      const Vec2 foot = altitude(from, u, v);
      const double h = (foot - from).norm();
      const Vec2 dir = (foot - from) / h;
      const double d = cross2(dir, x - from);
      sum += d / h;
    }
    CHECK(std::abs(sum) < 1e-10);
  }
}
