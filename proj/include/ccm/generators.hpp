#pragma once

#include <random>

#include "ccm/planar.hpp"
#include "ccm/polytope.hpp"
#include "ccm/spherical.hpp"

// Deterministic random fixtures for the verification suites and tests.
namespace ccm::gen {

using Rng = std::mt19937_64;

// --- planar ---

/// Uniform vertices in [-half_box, half_box]^2, n in [n_min, n_max],
/// resampled until the signed area is comfortably nonzero. May be
/// non-convex and self-intersecting.
OrientedPolygon random_polygon(Rng& rng, int n_min, int n_max,
                               double half_box);

/// Convex hull of random points (monotone chain).
OrientedPolygon random_convex_polygon(Rng& rng, double half_box);

struct CyclicPolygon {
  OrientedPolygon polygon;
  Vec2 center;
  double radius;
};

/// Vertices at sorted random angles on a random circle.
CyclicPolygon random_cyclic_polygon(Rng& rng, int n_min, int n_max);

/// Closed equal-side polygon from a random unit-step walk, iteratively
/// corrected for closure; sides are equal to ~1e-13 relative.
OrientedPolygon random_equilateral_polygon(Rng& rng, int n_min, int n_max);

Triangle random_triangle(Rng& rng, double half_box);

struct MirrorPolygon {
  OrientedPolygon polygon;
  LineSpec axis;
};

/// Polygon with an exact reflection symmetry across a random line.
MirrorPolygon random_mirror_polygon(Rng& rng);

struct RotSymPolygon {
  OrientedPolygon polygon;
  Vec2 center;
  int order;
};

/// Polygon with an exact rotational symmetry of order 2..5 and no side
/// line through the center.
RotSymPolygon random_rotationally_symmetric_polygon(Rng& rng);

/// Quadrilateral with three unit sides and a clearly different fourth.
OrientedPolygon random_three_equal_sides_quad(Rng& rng);

// --- polytope ---

/// Oriented boundary of a simplex (facets omit one vertex each, signs
/// arranged so the enclosed volume matches the simplex volume).
SimplicialBoundary simplex_boundary(const Simplex& s);

/// Simplex with vertices in a box, resampled until well-shaped.
Simplex random_simplex(Rng& rng, int dim, double half_box);

/// Octahedron-combinatorics boundary with random per-vertex radii, random
/// rotation and translation (star-shaped, possibly non-convex).
SimplicialBoundary random_boundary_3d(Rng& rng);

/// Alternates jittered cross-polytope (16-cell) boundaries and random
/// 4-simplex boundaries.
SimplicialBoundary random_boundary_4d(Rng& rng);

struct InscribedPolytope {
  SimplicialBoundary boundary;
  VecN center;
  double radius;
};

/// Random simplicial polytope with every vertex on a random sphere
/// (jittered octahedron or subdivided octahedron combinatorics).
InscribedPolytope random_inscribed_polytope_3d(Rng& rng);

/// Random inscribed 4-polytope (jittered cross-polytope combinatorics).
InscribedPolytope random_inscribed_polytope_4d(Rng& rng);

/// Axis-aligned box triangulated into 12 outward-oriented facets.
SimplicialBoundary box_boundary(const Vec3& lo, const Vec3& hi);

/// Octahedron with vertices center +- scale e_i, outward-oriented.
SimplicialBoundary octahedron_boundary(double scale, const Vec3& center);

/// Split a boundary into two closed pieces along the cone from `z` over
/// the boundary of the selected facet subset. The pieces' outer facets are
/// exactly the facets of `p` (no refinement), and the cone walls appear in
/// both pieces with opposite orientations, which is the decomposition the
/// Archimedes combination is stated for.
std::pair<SimplicialBoundary, SimplicialBoundary> cone_split(
    const SimplicialBoundary& p, const VecN& z,
    const std::vector<bool>& in_first);

/// Random cone split with both piece volumes bounded away from zero.
std::pair<SimplicialBoundary, SimplicialBoundary> random_cone_split(
    Rng& rng, const SimplicialBoundary& p);

// --- spherical ---

Vec3 random_unit_vector(Rng& rng);

/// Star-shaped spherical polygon around a random axis.
SphericalPolygon random_spherical_polygon(Rng& rng, int n_min, int n_max);

/// Equal-arc-side spherical polygon produced by constraint-projection
/// sweeps; sides match to ~1e-13 relative.
SphericalPolygon random_equilateral_spherical_polygon(Rng& rng, int n_min,
                                                      int n_max);

}  // namespace ccm::gen
