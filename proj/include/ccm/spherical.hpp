#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ccm/core.hpp"

namespace ccm {

/// A direction on the unit sphere carrying a nonnegative mass. Spherical
/// masses add as vectors: the combined system is the normalized sum of
/// mass * direction, with the new mass equal to the pre-normalization norm.
struct MassedDirection {
  Vec3 direction;
  double mass = 0.0;

  Vec3 raw() const { return mass * direction; }
};

struct MassedDirectionN {
  VecN direction;
  double mass = 0.0;
};

/// Spherical polygon on S^2: a cyclic list of unit vectors in which
/// consecutive vertices are neither equal nor antipodal (the circumcircle
/// orientation rule is ambiguous for antipodal pairs).
class SphericalPolygon {
 public:
  explicit SphericalPolygon(std::vector<Vec3> vertices,
                            double eps_rel = kDefaultEpsRel);

  int size() const { return static_cast<int>(verts_.size()); }
  const std::vector<Vec3>& vertices() const { return verts_; }
  const Vec3& vertex(int i) const;

  /// Largest chord distance between vertices.
  double diameter() const { return diameter_; }

 private:
  std::vector<Vec3> verts_;
  double diameter_ = 0.0;
};

enum class MinkowskiClass { SpaceLike, TimeLike, Null };

const char* minkowski_class_name(MinkowskiClass c);

/// Cyclic cross-product sum of a hyperboloid polygon under the Minkowski
/// form z^2 - x^2 - y^2, its sign class, and (when time-like) the
/// normalized point on the upper hyperboloid sheet. No mass is attached.
struct MinkowskiCcm {
  Vec3 vector;
  MinkowskiClass cls = MinkowskiClass::Null;
  std::optional<Vec3> h2_point;
};

/// Spherical (great-circle) distance, accurate near 0 and pi.
double spherical_distance(const Vec3& a, const Vec3& b);

/// The unnormalized circumcenter vector a x b + b x c + c x a, evaluated in
/// the cancellation-free edge form (b-a) x (c-a). Its norm is twice the
/// area of the plane triangle abc.
Vec3 spherical_circumcenter_raw(const Vec3& a, const Vec3& b, const Vec3& c);

/// Circumcenter of a spherical triangle, oriented by the cyclic vertex
/// order (right-hand rule), with mass twice the plane-triangle area. Throws
/// GreatCircleDegenerate when the three points span no plane off the
/// origin.
MassedDirection spherical_circumcenter(const Vec3& a, const Vec3& b,
                                       const Vec3& c);

/// Center of mass of a system of massed directions: the normalized
/// mass-weighted vector sum. Throws BalancedConfiguration when the sum
/// vanishes (e.g. equal antipodal masses).
MassedDirection spherical_mass_center(std::span<const MassedDirection> points);

/// Unnormalized lamina vector of a spherical triangle:
/// a x b * d(a,b)/sin d(a,b) + (cyclic). Throws AntipodalPair when a vertex
/// pair is antipodal (the d/sin d weight diverges).
Vec3 spherical_triangle_lamina_raw(const Vec3& a, const Vec3& b,
                                   const Vec3& c);

/// Center of mass of the spherical triangular lamina, with mass the norm of
/// the lamina vector. Throws GreatCircleDegenerate when the vector
/// vanishes.
MassedDirection spherical_triangle_lamina_cm(const Vec3& a, const Vec3& b,
                                             const Vec3& c);

/// Circumcenter of mass of a spherical polygon: the normalized cyclic sum
/// of v_i x v_{i+1}. Throws DegeneratePolygon when the sum vanishes (the
/// hemisphere-symmetric case has no convention).
MassedDirection spherical_ccm(const SphericalPolygon& p);

/// The same point through the fan triangulation from apex w (the weighted
/// circumcenter vectors of the triangles w-v_i-v_{i+1} summed); equal to
/// spherical_ccm for every w since the w terms cancel.
MassedDirection spherical_ccm_fan(const SphericalPolygon& p, const Vec3& w);

/// Lamina center of mass of the spherical polygon via the fan from apex w.
MassedDirection spherical_lamina_cm(const SphericalPolygon& p, const Vec3& w);

/// Lamina center of mass with a deterministic apex (normalized vertex mean,
/// with fallbacks).
MassedDirection spherical_lamina_cm(const SphericalPolygon& p);

/// CCM of a finely sampled closed spherical curve (n >= 16 samples); the
/// discrete form of the integral of gamma x gamma'.
MassedDirection spherical_curve_ccm(std::span<const Vec3> samples);

/// Generalized cross product of n vectors in R^{n+1}: the unique vector
/// with det(v_1, ..., v_n, xi) = cross . xi for every xi. Linearly
/// dependent input yields the zero vector.
VecN generalized_cross(std::span<const VecN> vs);

/// Boundary of a simplicial spherical polytope on S^n in R^{n+1}: unit
/// vertices and ordered facet index lists of length n.
struct SphericalBoundary {
  int sphere_dim = 2;  // n, ambient dimension n+1
  std::vector<VecN> vertices;
  std::vector<std::vector<int>> facets;
};

/// CCM of a spherical polytope boundary: the normalized sum of generalized
/// cross products of the facet vertices; independent of the triangulation
/// apex. Throws DegenerateBoundary when the sum vanishes.
MassedDirectionN spherical_ccm_polytope(const SphericalBoundary& p);

/// Value of the Minkowski form z^2 - x^2 - y^2.
double minkowski_form(const Vec3& v);

/// CCM of a polygon on the upper sheet of the hyperboloid z^2-x^2-y^2 = 1:
/// the Minkowski cross-product cyclic sum classified as space-like,
/// time-like or null. Inputs off the hyperboloid throw ConstraintViolation.
MinkowskiCcm minkowski_ccm(std::span<const Vec3> polygon,
                           double eps_rel = kDefaultEpsRel);

}  // namespace ccm
