#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "ccm/core.hpp"
#include "support/oracles.hpp"

using namespace ccm;

namespace {

std::mt19937_64 rng(20240817);

double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Vec2 random_point(double half_box) {
  return Vec2(uniform(-half_box, half_box), uniform(-half_box, half_box));
}

Triangle random_nondegenerate_triangle() {
  for (;;) {
    const Triangle t{random_point(5), random_point(5), random_point(5)};
    if (std::abs(signed_area(t)) > 0.02 * t.squared_diameter()) return t;
  }
}

}  // namespace

TEST_CASE("signed area follows vertex order") {
  CHECK(signed_area({Vec2(0, 0), Vec2(1, 0), Vec2(0, 1)}) ==
        doctest::Approx(0.5));
  CHECK(signed_area({Vec2(0, 0), Vec2(0, 1), Vec2(1, 0)}) ==
        doctest::Approx(-0.5));
  CHECK(signed_area({Vec2(0, 0), Vec2(2, 0), Vec2(4, 0)}) ==
        doctest::Approx(0.0));
}

TEST_CASE("signed area is antisymmetric under transpositions") {
  for (int i = 0; i < 50; ++i) {
    const Triangle t{random_point(5), random_point(5), random_point(5)};
    const double base = signed_area(t);
    CHECK(signed_area({t.b, t.a, t.c}) == doctest::Approx(-base));
    CHECK(signed_area({t.a, t.c, t.b}) == doctest::Approx(-base));
    CHECK(signed_area({t.c, t.b, t.a}) == doctest::Approx(-base));
  }
}

TEST_CASE("circumcenter of the right and equilateral triangles") {
  const Vec2 right = circumcenter({Vec2(0, 0), Vec2(4, 0), Vec2(0, 3)});
  CHECK(right.x() == doctest::Approx(2.0));
  CHECK(right.y() == doctest::Approx(1.5));

  const Vec2 equi = circumcenter(
      {Vec2(0, 0), Vec2(1, 0), Vec2(0.5, std::sqrt(3.0) / 2.0)});
  CHECK(equi.x() == doctest::Approx(0.5));
  CHECK(equi.y() == doctest::Approx(std::sqrt(3.0) / 6.0));
}

TEST_CASE("circumcenter matches the explicit formula and is equidistant") {
  for (int i = 0; i < 200; ++i) {
    const Triangle t = random_nondegenerate_triangle();
    const Vec2 c = circumcenter(t);
    const Vec2 ref = oracles::circumcenter_formula(t);
    CHECK((c - ref).norm() < 1e-9 * (1.0 + ref.norm()));
    const double ra = (c - t.a).norm();
    CHECK(std::abs((c - t.b).norm() - ra) < 1e-9 * ra);
    CHECK(std::abs((c - t.c).norm() - ra) < 1e-9 * ra);
  }
}

TEST_CASE("circumcenter commutes with isometries") {
  for (int i = 0; i < 100; ++i) {
    const Triangle t = random_nondegenerate_triangle();
    const double phi = uniform(0, 2 * std::numbers::pi);
    Eigen::Matrix2d rot;
    rot << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
    const Vec2 shift = random_point(5);
    const Triangle moved{rot * t.a + shift, rot * t.b + shift,
                         rot * t.c + shift};
    const Vec2 expected = rot * circumcenter(t) + shift;
    CHECK((circumcenter(moved) - expected).norm() <
          1e-9 * (1.0 + expected.norm()));
  }
}

TEST_CASE("circumcenter rejects degenerate triangles") {
  CHECK_THROWS_AS(circumcenter({Vec2(0, 0), Vec2(1, 0), Vec2(2, 0)}), Error);
  try {
    circumcenter({Vec2(0, 0), Vec2(1, 0), Vec2(2, 0)});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Degenerate);
  }
}

TEST_CASE("circumradius of standard examples") {
  const Circumradius right = circumradius({Vec2(0, 0), Vec2(4, 0), Vec2(0, 3)});
  CHECK_FALSE(right.infinite);
  CHECK(right.value == doctest::Approx(2.5));

  const Circumradius collinear =
      circumradius({Vec2(0, 0), Vec2(1, 0), Vec2(2, 0)});
  CHECK(collinear.infinite);
}

TEST_CASE("repeated-vertex circumradius is the limit of a shrinking apex") {
  // Limit-sequence oracle: the apex approaches a base endpoint; the
  // circumradius approaches half the base length.
  double previous_gap = 1.0;
  for (double eps : {1e-3, 1e-5, 1e-7, 1e-9}) {
    const Circumradius r =
        circumradius({Vec2(0, 0), Vec2(1, 0), Vec2(1, eps)});
    REQUIRE_FALSE(r.infinite);
    const double gap = std::abs(r.value - 0.5);
    CHECK(gap < previous_gap);
    previous_gap = gap;
  }
  CHECK(previous_gap < 1e-8);

  const Circumradius exact =
      circumradius({Vec2(0, 0), Vec2(1, 0), Vec2(1, 0)});
  CHECK_FALSE(exact.infinite);
  CHECK(exact.value == doctest::Approx(0.5));

  CHECK_THROWS_AS(circumradius({Vec2(2, 3), Vec2(2, 3), Vec2(2, 3)}), Error);
}

TEST_CASE("degeneracy taxonomy") {
  CHECK(classify_degeneracy({Vec2(0, 0), Vec2(1, 0), Vec2(2, 0)}) ==
        DegeneracyClass::DangerousDegenerate);
  CHECK(classify_degeneracy({Vec2(0, 0), Vec2(1, 0), Vec2(1, 1e-14)}) ==
        DegeneracyClass::SafeDegenerate);
  CHECK(classify_degeneracy({Vec2(0, 0), Vec2(4, 0), Vec2(0, 3)}) ==
        DegeneracyClass::NonDegenerate);
  // A point triangle has a bounded limit circle.
  CHECK(classify_degeneracy({Vec2(1, 1), Vec2(1, 1), Vec2(1, 1)}) ==
        DegeneracyClass::SafeDegenerate);
}

TEST_CASE("well-separated triangles always classify non-degenerate") {
  int found = 0;
  while (found < 100) {
    const Triangle t{random_point(6), random_point(6), random_point(6)};
    const double min_side =
        std::min({(t.b - t.a).norm(), (t.c - t.b).norm(),
                  (t.a - t.c).norm()});
    if (min_side < 1.0 || std::abs(signed_area(t)) < 0.1) continue;
    ++found;
    CHECK(classify_degeneracy(t) == DegeneracyClass::NonDegenerate);
  }
}

TEST_CASE("combine of weighted points") {
  auto wp = [](double x, double y, double m) {
    VecN v(2);
    v << x, y;
    return WeightedPoint{v, m};
  };
  const std::vector<WeightedPoint> midpoint = {wp(0, 0, 1), wp(2, 0, 1)};
  const WeightedPoint mid = combine(midpoint);
  CHECK(mid.mass == doctest::Approx(2.0));
  CHECK(mid.point(0) == doctest::Approx(1.0));
  CHECK(mid.point(1) == doctest::Approx(0.0));

  const std::vector<WeightedPoint> single = {wp(5, 5, 3)};
  const WeightedPoint same = combine(single);
  CHECK(same.mass == doctest::Approx(3.0));
  CHECK(same.point(0) == doctest::Approx(5.0));

  const std::vector<WeightedPoint> subtraction = {wp(0, 0, 2), wp(3, 0, -1)};
  const WeightedPoint diff = combine(subtraction);
  CHECK(diff.mass == doctest::Approx(1.0));
  CHECK(diff.point(0) == doctest::Approx(-3.0));
  CHECK(diff.point(1) == doctest::Approx(0.0));

  const std::vector<WeightedPoint> balanced = {wp(0, 0, 1), wp(1, 1, -1)};
  CHECK_THROWS_AS(combine(balanced), Error);
}

TEST_CASE("operations are safe to run concurrently") {
  // All operations are pure; hammer the same inputs from several threads
  // and require identical results.
  const Triangle t{Vec2(0.3, -1.2), Vec2(4.1, 0.4), Vec2(1.0, 3.7)};
  const Vec2 expected = circumcenter(t);
  std::atomic<int> mismatches{0};
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&] {
      for (int i = 0; i < 2000; ++i) {
        if ((circumcenter(t) - expected).norm() != 0.0) ++mismatches;
        if (classify_degeneracy(t) != DegeneracyClass::NonDegenerate) {
          ++mismatches;
        }
      }
    });
  }
  for (std::thread& w : workers) w.join();
  CHECK(mismatches.load() == 0);
}

TEST_CASE("combine is permutation invariant and associative") {
  auto random_wp = [&] {
    VecN v(2);
    v << uniform(-5, 5), uniform(-5, 5);
    return WeightedPoint{v, uniform(0.2, 3.0) * (uniform(0, 1) < 0.3 ? -1 : 1)};
  };
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<WeightedPoint> pts;
    const int n = 2 + static_cast<int>(uniform(0, 5));
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      pts.push_back(random_wp());
      total += pts.back().mass;
    }
    if (std::abs(total) < 0.1) continue;
    const WeightedPoint direct = combine(pts);

    std::vector<WeightedPoint> shuffled = pts;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const WeightedPoint again = combine(shuffled);
    CHECK((direct.point - again.point).norm() < 1e-12 * (1 + direct.point.norm()));
    CHECK(direct.mass == doctest::Approx(again.mass));

    // Fold pairwise: combine(combine(p0..pk), rest) equals the flat sum.
    if (std::abs(pts[0].mass + pts[1].mass) > 0.05) {
      std::vector<WeightedPoint> head = {pts[0], pts[1]};
      std::vector<WeightedPoint> folded = {combine(head)};
      folded.insert(folded.end(), pts.begin() + 2, pts.end());
      const WeightedPoint nested = combine(folded);
      CHECK((direct.point - nested.point).norm() <
            1e-10 * (1 + direct.point.norm()));
      CHECK(direct.mass == doctest::Approx(nested.mass));
    }
  }
}
