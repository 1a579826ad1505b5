#pragma once

#include <vector>

#include "ccm/core.hpp"
#include "ccm/planar.hpp"

namespace ccm {

/// An n-simplex in R^n given by its n+1 vertices in order; the order fixes
/// the orientation.
struct Simplex {
  std::vector<VecN> vertices;

  int dim() const {
    return vertices.empty() ? 0 : static_cast<int>(vertices.front().size());
  }
  double squared_diameter() const;
  Tolerance default_tolerance() const {
    return Tolerance::for_scale(squared_diameter());
  }
};

/// Boundary of a simplicial polytope in R^n (2 <= n <= 6): a vertex table
/// and ordered facet index lists of length n. The facet vertex order
/// carries the orientation; construction verifies that the facets close up
/// into a cycle (the total signed projected volume of the boundary along
/// every coordinate axis vanishes), which is exactly the condition that
/// makes the cone-triangulation sums base-point independent.
class SimplicialBoundary {
 public:
  SimplicialBoundary(int dim, std::vector<VecN> vertex_table,
                     std::vector<std::vector<int>> facets);

  int dim() const { return dim_; }
  const std::vector<VecN>& vertex_table() const { return verts_; }
  const std::vector<std::vector<int>>& facets() const { return facets_; }
  int facet_count() const { return static_cast<int>(facets_.size()); }

  /// Vertices of one facet, in facet order.
  std::vector<VecN> facet_vertices(int f) const;

  double diameter() const { return diameter_; }
  Tolerance default_tolerance(double eps_rel = kDefaultEpsRel) const {
    return Tolerance::for_scale(diameter_ * diameter_, eps_rel);
  }

 private:
  int dim_;
  std::vector<VecN> verts_;
  std::vector<std::vector<int>> facets_;
  double diameter_ = 0.0;
};

/// Signed volume det M(S)/n! of the bordered vertex matrix (vertex columns
/// over a row of ones), with the orientation convention that makes the
/// standard simplex (0, e_1, ..., e_n) positive.
double simplex_signed_volume(const Simplex& s);

/// Circumcenter by the determinant formula: coordinate i equals
/// det M_i(S) / (2 det M(S)), where M_i replaces coordinate row i of the
/// bordered matrix with the squared vertex norms. Throws DegenerateSimplex
/// when |volume| <= tol.eps_area.
VecN simplex_circumcenter(const Simplex& s, const Tolerance& tol);
VecN simplex_circumcenter(const Simplex& s);

/// Signed volume enclosed by the boundary (sum of origin-cone volumes).
double polytope_volume(const SimplicialBoundary& p);

/// Circumcenter of mass via cone simplices over the facets from base point
/// o: the volume-weighted combination of the cone circumcenters. Safe
/// degenerate cones are skipped, dangerous ones (o on a facet hyperplane
/// with the circumcenter escaping) throw DangerousCone. Throws ZeroVolume.
VecN ccm_polytope(const SimplicialBoundary& p, const VecN& o,
                  const Tolerance& tol);
VecN ccm_polytope(const SimplicialBoundary& p, const VecN& o);

/// Deterministic admissible base point for ccm_polytope (vertex centroid,
/// else up to 8 seeded perturbations inside the bounding box).
VecN pick_admissible_base_point(const SimplicialBoundary& p,
                                const Tolerance& tol);

/// Closed-form circumcenter of mass: coordinate i equals
/// sum_F det A_i(F) / (2 n! V(P)) with A(F) the facet vertex-column matrix
/// and A_i(F) its coordinate row i replaced by squared norms (the cone sum
/// with the base point at the origin). Homogeneous of degree one.
VecN ccm_polytope_closed_form(const SimplicialBoundary& p,
                              const Tolerance& tol);
VecN ccm_polytope_closed_form(const SimplicialBoundary& p);

/// Solid center of mass: volume-weighted sum of origin-cone centroids.
VecN cm_polytope(const SimplicialBoundary& p, const Tolerance& tol);
VecN cm_polytope(const SimplicialBoundary& p);

/// C_t = t*CM + (1-t)*CCM in R^n.
VecN c_t_polytope(const SimplicialBoundary& p, CenterParameter t,
                  const Tolerance& tol);
VecN c_t_polytope(const SimplicialBoundary& p, CenterParameter t);

/// Monge point C_{(n+1)/(n-1)}; the orthocenter for n = 2.
VecN monge_point(const SimplicialBoundary& p, const Tolerance& tol);
VecN monge_point(const SimplicialBoundary& p);

/// Volume-weighted combination of the CCMs of two polytopes that share an
/// internal wall with opposite orientations. Throws ZeroVolumePiece when a
/// piece's volume is at or below the floor.
VecN archimedes_combine_polytope(const SimplicialBoundary& q,
                                 const SimplicialBoundary& r,
                                 const Tolerance& tol);
VecN archimedes_combine_polytope(const SimplicialBoundary& q,
                                 const SimplicialBoundary& r);

/// A planar polygon as a dimension-2 simplicial boundary (edges as facets).
SimplicialBoundary polygon_boundary(const OrientedPolygon& p);

}  // namespace ccm
