#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ccm/core.hpp"

namespace ccm {

/// Oriented planar polygon: a cyclic vertex list whose order determines the
/// sign of the area. Vertices may be collinear and edges may cross; only
/// consecutive duplicates are rejected at construction. Operations that
/// produce a center additionally require |signed_area| above the area floor.
class OrientedPolygon {
 public:
  explicit OrientedPolygon(std::vector<Vec2> vertices);

  int size() const { return static_cast<int>(verts_.size()); }
  const std::vector<Vec2>& vertices() const { return verts_; }

  /// Cyclic access: any integer index is reduced mod n.
  const Vec2& vertex(int i) const;

  double signed_area() const { return area_; }
  double diameter() const { return diameter_; }
  Vec2 vertex_centroid() const;

  Tolerance default_tolerance(double eps_rel = kDefaultEpsRel) const {
    return Tolerance::for_scale(diameter_ * diameter_, eps_rel);
  }

 private:
  std::vector<Vec2> verts_;
  double area_ = 0.0;
  double diameter_ = 0.0;
};

/// Parameter t selecting the point C_t = t*CM + (1-t)*CCM on the
/// generalized Euler line (t=0: circumcenter of mass, t=1: lamina center
/// of mass, t=3 on a triangle: orthocenter).
struct CenterParameter {
  double t = 0.0;
};

/// The two anchor points of the generalized Euler line. `degenerate` is set
/// when they coincide within eps_rel * diameter, in which case the line
/// collapses to a single point.
struct EulerLine {
  Vec2 ccm;
  Vec2 cm;
  bool degenerate = false;
};

/// A vertex-to-vertex polyline cutting a polygon in two: it starts at
/// vertex `start`, visits the waypoints in order, and ends at vertex `end`.
struct VertexCut {
  int start = 0;
  int end = 0;
  std::vector<Vec2> waypoints;
};

struct LineSpec {
  Vec2 point;
  Vec2 direction;
};

struct SymmetryReport {
  EulerLine euler;
  bool equilateral = false;
  // Only set when a candidate mirror line was supplied: largest distance of
  // the two Euler anchors from the line, and whether that is below
  // eps_rel * diameter.
  std::optional<double> mirror_distance;
  std::optional<bool> on_mirror;
  // Only set when exactly one side length differs from the (equal) rest:
  // its index i (side from vertex i to i+1) and the angle in [0, pi/2]
  // between the Euler line and that side. Expected pi/2 by the symmetry
  // theorem. Unset when the Euler line is degenerate.
  std::optional<int> odd_side;
  std::optional<double> odd_side_angle;
};

/// Circumcenter of mass through the fan triangulation with base point `o`:
/// sum of A_i/A(P) * C_i over the non-degenerate fan triangles o-v_i-v_{i+1}.
/// Safe degenerate triangles carry zero mass and are skipped; a dangerous
/// one (o on a side line, circumcenter escaping to infinity) throws
/// DangerousTriangulation. Throws ZeroArea when |A(P)| <= tol.eps_area.
Vec2 ccm_fan(const OrientedPolygon& p, const Vec2& o, const Tolerance& tol);
Vec2 ccm_fan(const OrientedPolygon& p, const Vec2& o);

/// Deterministically pick a base point admissible for ccm_fan: the vertex
/// centroid, else up to 8 seeded pseudo-random perturbations inside the
/// bounding box. Throws DangerousTriangulation when none qualifies.
Vec2 pick_admissible_base_point(const OrientedPolygon& p,
                                const Tolerance& tol);

/// ccm_fan at the automatically chosen base point.
Vec2 ccm_fan_auto(const OrientedPolygon& p, const Tolerance& tol);

/// Circumcenter of mass by the closed-form cyclic sum (the fan evaluated at
/// the origin, simplified): (1/4A) * sum |v_i|^2 * (y_{i+1} - y_{i-1}) and
/// the analogous y component. Agrees with ccm_fan for every admissible base
/// point. Throws ZeroArea.
Vec2 ccm_closed_form(const OrientedPolygon& p, const Tolerance& tol);
Vec2 ccm_closed_form(const OrientedPolygon& p);

/// The 90-degree-rotated form (1/4A) * sum |v_i|^2 (v_{i+1} - v_{i-1});
/// rotating it back by -90 degrees gives ccm_closed_form.
Vec2 ccm_rotated_form(const OrientedPolygon& p, const Tolerance& tol);

/// Center of mass of the homogeneous lamina bounded by the polygon
/// (shoelace centroid). Throws ZeroArea.
Vec2 cm_lamina(const OrientedPolygon& p, const Tolerance& tol);
Vec2 cm_lamina(const OrientedPolygon& p);

/// C_t = t*CM + (1-t)*CCM.
Vec2 c_t(const OrientedPolygon& p, CenterParameter t, const Tolerance& tol);
Vec2 c_t(const OrientedPolygon& p, CenterParameter t);

EulerLine euler_line(const OrientedPolygon& p, const Tolerance& tol);
EulerLine euler_line(const OrientedPolygon& p);

/// CCM of a quadrilateral as the intersection of the perpendicular
/// bisectors of its diagonals. The bisectors are parallel exactly when the
/// signed area of ABCD vanishes; that case throws ParallelBisectors.
Vec2 ccm_quadrilateral_bisectors(const Vec2& a, const Vec2& b, const Vec2& c,
                                 const Vec2& d, const Tolerance& tol);

/// Distances from C_t(ABCD) to C_t(BCD), C_t(CDA), C_t(DAB), C_t(ABC).
/// The proportion identities a*A(BCD) = c*A(DAB), b*A(CDA) = d*A(ABC) are
/// the caller's to assert. Throws Degenerate when the quadrilateral or any
/// vertex-deleted triangle has area at or below the floor.
std::array<double, 4> subtriangle_distance_ratios(const Vec2& a,
                                                  const Vec2& b,
                                                  const Vec2& c,
                                                  const Vec2& d,
                                                  CenterParameter t,
                                                  const Tolerance& tol);

/// Split p along a vertex-to-vertex polyline into the two closed pieces.
/// Throws InvalidCut for malformed cuts (equal endpoints, out-of-range
/// indices, pieces with fewer than three vertices or repeated consecutive
/// vertices).
std::pair<OrientedPolygon, OrientedPolygon> split_polygon(
    const OrientedPolygon& p, const VertexCut& cut);

/// CCM of the whole polygon as the area-weighted combination of the CCMs of
/// the two pieces produced by the cut. A piece whose area is at or below
/// the floor throws ZeroAreaPiece: its circumcenter contribution exists
/// only as a weighted limit and dropping it would silently shift the
/// result.
Vec2 archimedes_combine(const OrientedPolygon& p, const VertexCut& cut,
                        const Tolerance& tol);
Vec2 archimedes_combine(const OrientedPolygon& p, const VertexCut& cut);

/// CCM of a finely sampled closed curve (n >= 16 samples): the closed form
/// of the sample polygon. As sampling refines, converges (quadratically in
/// the sample count) to the center of mass of the enclosed lamina.
Vec2 curve_ccm(std::span<const Vec2> samples);

/// Symmetry diagnostics for the generalized Euler line: degeneracy,
/// position relative to a candidate mirror line, and orthogonality to the
/// odd side of an all-but-one-sides-equal polygon.
SymmetryReport symmetry_diagnostics(const OrientedPolygon& p,
                                    std::optional<LineSpec> mirror = {});
SymmetryReport symmetry_diagnostics(const OrientedPolygon& p,
                                    std::optional<LineSpec> mirror,
                                    const Tolerance& tol);

}  // namespace ccm
