#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "ccm/errors.hpp"

namespace ccm {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using VecN = Eigen::VectorXd;

// Default absolute area floor is this factor times the squared diameter of
// the input, so degeneracy decisions are scale-free.
inline constexpr double kEpsAreaScale = 1e-12;
inline constexpr double kDefaultEpsRel = 1e-9;

/// Tolerance pair used by every degeneracy decision in the library.
/// `eps_area` is an absolute floor on signed areas / volumes / masses;
/// `eps_rel` is the relative tolerance for coordinate comparisons, and its
/// reciprocal is the circumradius threshold separating safe from dangerous
/// degenerations (an absolute length; callers working far from unit scale
/// should adjust it).
struct Tolerance {
  double eps_area = kEpsAreaScale;
  double eps_rel = kDefaultEpsRel;

  static Tolerance for_scale(double squared_diameter,
                             double eps_rel = kDefaultEpsRel) {
    Tolerance tol;
    tol.eps_area = kEpsAreaScale * squared_diameter;
    tol.eps_rel = eps_rel;
    return tol;
  }
};

inline double cross2(const Vec2& a, const Vec2& b) {
  return a.x() * b.y() - a.y() * b.x();
}

/// Rotate a planar vector by +90 degrees.
inline Vec2 rot90(const Vec2& v) { return Vec2(-v.y(), v.x()); }

struct Triangle {
  Vec2 a, b, c;

  double squared_diameter() const;
  Tolerance default_tolerance() const {
    return Tolerance::for_scale(squared_diameter());
  }
};

/// Degeneration taxonomy for triangles: a degenerate triangle is dangerous
/// when its circumcenter escapes to infinity (an angle tends to 0 or pi
/// while the opposite side stays bounded away from zero); it is safe when
/// the circumcenter stays bounded, in which case the triangle carries zero
/// mass and may be dropped from weighted sums.
enum class DegeneracyClass {
  NonDegenerate,
  SafeDegenerate,
  DangerousDegenerate,
};

const char* degeneracy_class_name(DegeneracyClass c);

/// Circumradius with an explicit marker for the collinear-distinct case so
/// that infinities never leak into arithmetic.
struct Circumradius {
  bool infinite = false;
  double value = 0.0;
};

/// A location with a signed mass; the unit of the (+)/(-) weighted
/// combination algebra.
struct WeightedPoint {
  VecN point;
  double mass = 0.0;
};

/// Signed area of the triangle: 0.5 * det(b - a, c - a).
double signed_area(const Triangle& t);

/// Circumcenter obtained by solving the 2x2 perpendicular-bisector system.
/// Throws Degenerate when |signed_area| <= tol.eps_area.
Vec2 circumcenter(const Triangle& t, const Tolerance& tol);
Vec2 circumcenter(const Triangle& t);

/// Circumradius, with the limit convention for an exactly repeated vertex
/// (half the distance between the two distinct locations) and an explicit
/// infinite marker for collinear distinct vertices.
/// Throws AllCoincident when the three vertices are identical.
Circumradius circumradius(const Triangle& t);

/// NonDegenerate iff |area| > tol.eps_area; among degenerate triangles,
/// dangerous iff the circumradius exceeds 1/tol.eps_rel.
DegeneracyClass classify_degeneracy(const Triangle& t, const Tolerance& tol);
DegeneracyClass classify_degeneracy(const Triangle& t);

/// Mass-weighted affine combination: total mass = sum of masses, point =
/// (sum m_i p_i) / (sum m_i). Subtraction of a shape is combination with
/// the mass negated. Throws ZeroTotalMass when |sum m_i| <= mass_floor.
WeightedPoint combine(std::span<const WeightedPoint> points,
                      double mass_floor);

/// Same with a scale-free default floor of kEpsAreaScale * sum |m_i|.
WeightedPoint combine(std::span<const WeightedPoint> points);

}  // namespace ccm
