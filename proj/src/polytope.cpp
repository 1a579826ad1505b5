#include "ccm/polytope.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace ccm {

namespace {

constexpr int kMinDim = 2;
constexpr int kMaxDim = 6;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void require_supported_dim(int n) {
  if (n < kMinDim || n > kMaxDim) {
    throw Error(ErrorCode::UnsupportedDimension,
                "supported dimensions are 2..6");
  }
}

// Bordered (n+1)x(n+1) matrix: vertex columns over a row of ones.
Eigen::MatrixXd bordered_matrix(const std::vector<VecN>& verts) {
  const int n = static_cast<int>(verts.front().size());
  Eigen::MatrixXd m(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) {
    m.block(0, j, n, 1) = verts[j];
    m(n, j) = 1.0;
  }
  return m;
}

void validate_simplex(const Simplex& s) {
  const int n = s.dim();
  require_supported_dim(n);
  if (static_cast<int>(s.vertices.size()) != n + 1) {
    throw Error(ErrorCode::InvalidInput,
                "simplex needs dimension + 1 vertices");
  }
  for (const VecN& v : s.vertices) {
    if (v.size() != n || !v.allFinite()) {
      throw Error(ErrorCode::InvalidInput, "bad simplex vertex");
    }
  }
}

// n x n facet vertex-column matrix A(F), optionally with coordinate row
// `replace_row` overwritten with the squared vertex norms (A_i(F)).
Eigen::MatrixXd facet_matrix(const std::vector<VecN>& verts,
                             int replace_row = -1) {
  const int n = static_cast<int>(verts.size());
  Eigen::MatrixXd a(n, n);
  for (int j = 0; j < n; ++j) a.col(j) = verts[j];
  if (replace_row >= 0) {
    for (int j = 0; j < n; ++j) a(replace_row, j) = verts[j].squaredNorm();
  }
  return a;
}

}  // namespace

double Simplex::squared_diameter() const {
  double sq = 0.0;
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      sq = std::max(sq, (vertices[j] - vertices[i]).squaredNorm());
    }
  }
  return sq;
}

double simplex_signed_volume(const Simplex& s) {
  validate_simplex(s);
  const int n = s.dim();
  const double det = bordered_matrix(s.vertices).determinant();
  // det of the vertices-over-ones matrix is (-1)^n times the edge-matrix
  // determinant; the sign below pins the standard simplex positive.
  const double parity = (n % 2 == 0) ? 1.0 : -1.0;
  return parity * det / factorial(n);
}

VecN simplex_circumcenter(const Simplex& s, const Tolerance& tol) {
  validate_simplex(s);
  if (std::abs(simplex_signed_volume(s)) <= tol.eps_area) {
    throw Error(ErrorCode::DegenerateSimplex,
                "simplex volume below floor; circumcenter may be at infinity");
  }
  const int n = s.dim();
  Eigen::MatrixXd m = bordered_matrix(s.vertices);
  const double det_m = m.determinant();
  VecN center(n);
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXd mi = m;
    for (int j = 0; j <= n; ++j) mi(i, j) = s.vertices[j].squaredNorm();
    center(i) = mi.determinant() / (2.0 * det_m);
  }
  return center;
}

VecN simplex_circumcenter(const Simplex& s) {
  return simplex_circumcenter(s, s.default_tolerance());
}

SimplicialBoundary::SimplicialBoundary(int dim, std::vector<VecN> vertex_table,
                                       std::vector<std::vector<int>> facets)
    : dim_(dim), verts_(std::move(vertex_table)), facets_(std::move(facets)) {
  require_supported_dim(dim_);
  const int nv = static_cast<int>(verts_.size());
  if (nv < dim_ + 1) {
    throw Error(ErrorCode::InvalidBoundary, "too few vertices");
  }
  for (const VecN& v : verts_) {
    if (v.size() != dim_ || !v.allFinite()) {
      throw Error(ErrorCode::InvalidBoundary, "bad vertex");
    }
  }
  if (facets_.empty()) {
    throw Error(ErrorCode::InvalidBoundary, "no facets");
  }
  for (const std::vector<int>& f : facets_) {
    if (static_cast<int>(f.size()) != dim_) {
      throw Error(ErrorCode::InvalidBoundary,
                  "facets must have exactly dim vertices");
    }
    for (size_t i = 0; i < f.size(); ++i) {
      if (f[i] < 0 || f[i] >= nv) {
        throw Error(ErrorCode::InvalidBoundary, "facet index out of range");
      }
      for (size_t j = i + 1; j < f.size(); ++j) {
        if (f[i] == f[j]) {
          throw Error(ErrorCode::InvalidBoundary, "repeated facet index");
        }
      }
    }
  }
  for (int i = 0; i < nv; ++i) {
    for (int j = i + 1; j < nv; ++j) {
      diameter_ = std::max(diameter_, (verts_[j] - verts_[i]).norm());
    }
  }

  // Cycle check: for each axis, the facets' signed projected volumes must
  // cancel. The projection of a facet along axis k is the (n-1)-simplex of
  // the vertices with coordinate k dropped.
  const int n = dim_;
  const double fac = factorial(n - 1);
  const double parity = ((n - 1) % 2 == 0) ? 1.0 : -1.0;
  VecN sums = VecN::Zero(n);
  double scale = 0.0;
  Eigen::MatrixXd proj(n, n);
  for (const std::vector<int>& f : facets_) {
    for (int axis = 0; axis < n; ++axis) {
      for (int j = 0; j < n; ++j) {
        int r = 0;
        for (int i = 0; i < n; ++i) {
          if (i == axis) continue;
          proj(r++, j) = verts_[f[j]](i);
        }
        proj(n - 1, j) = 1.0;
      }
      const double vol = parity * proj.determinant() / fac;
      sums(axis) += vol;
      scale += std::abs(vol);
    }
  }
  const double floor = kDefaultEpsRel * scale + 1e-300;
  if (sums.lpNorm<Eigen::Infinity>() > floor) {
    throw Error(ErrorCode::InvalidBoundary,
                "facets do not close up into a cycle");
  }
}

std::vector<VecN> SimplicialBoundary::facet_vertices(int f) const {
  std::vector<VecN> out;
  out.reserve(dim_);
  for (int idx : facets_[f]) out.push_back(verts_[idx]);
  return out;
}

double polytope_volume(const SimplicialBoundary& p) {
  const double fac = factorial(p.dim());
  double vol = 0.0;
  for (int f = 0; f < p.facet_count(); ++f) {
    vol += facet_matrix(p.facet_vertices(f)).determinant() / fac;
  }
  return vol;
}

namespace {

enum class ConeClass { NonDegenerate, Safe, Dangerous };

// Extension of the planar taxonomy to cone simplices: a degenerate cone is
// dangerous when the determinant-formula circumcenter exceeds 1/eps_rel in
// some coordinate, i.e. |det M_i| > 2 |det M| / eps_rel.
ConeClass classify_cone(const Simplex& cone, const Tolerance& tol) {
  if (std::abs(simplex_signed_volume(cone)) > tol.eps_area) {
    return ConeClass::NonDegenerate;
  }
  const int n = cone.dim();
  Eigen::MatrixXd m = bordered_matrix(cone.vertices);
  const double det_m = std::abs(m.determinant());
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXd mi = m;
    for (int j = 0; j <= n; ++j) mi(i, j) = cone.vertices[j].squaredNorm();
    if (std::abs(mi.determinant()) > 2.0 * det_m / tol.eps_rel) {
      return ConeClass::Dangerous;
    }
  }
  return ConeClass::Safe;
}

}  // namespace

VecN ccm_polytope(const SimplicialBoundary& p, const VecN& o,
                  const Tolerance& tol) {
  if (o.size() != p.dim() || !o.allFinite()) {
    throw Error(ErrorCode::InvalidInput, "base point of wrong dimension");
  }
  const double total = polytope_volume(p);
  if (std::abs(total) <= tol.eps_area) {
    throw Error(ErrorCode::ZeroVolume, "polytope volume below floor");
  }
  VecN acc = VecN::Zero(p.dim());
  for (int f = 0; f < p.facet_count(); ++f) {
    Simplex cone;
    cone.vertices.push_back(o);
    for (const VecN& v : p.facet_vertices(f)) cone.vertices.push_back(v);
    switch (classify_cone(cone, tol)) {
      case ConeClass::NonDegenerate:
        acc += simplex_signed_volume(cone) * simplex_circumcenter(cone, tol);
        break;
      case ConeClass::Safe:
        break;
      case ConeClass::Dangerous:
        throw Error(ErrorCode::DangerousCone,
                    "base point lies on a facet hyperplane");
    }
  }
  return acc / total;
}

VecN ccm_polytope(const SimplicialBoundary& p, const VecN& o) {
  return ccm_polytope(p, o, p.default_tolerance());
}

VecN pick_admissible_base_point(const SimplicialBoundary& p,
                                const Tolerance& tol) {
  const int n = p.dim();
  auto admissible = [&](const VecN& o) {
    for (int f = 0; f < p.facet_count(); ++f) {
      Simplex cone;
      cone.vertices.push_back(o);
      for (const VecN& v : p.facet_vertices(f)) cone.vertices.push_back(v);
      if (classify_cone(cone, tol) == ConeClass::Dangerous) return false;
    }
    return true;
  };
  VecN centroid = VecN::Zero(n);
  for (const VecN& v : p.vertex_table()) centroid += v;
  centroid /= static_cast<double>(p.vertex_table().size());
  if (admissible(centroid)) return centroid;

  VecN lo = p.vertex_table().front();
  VecN hi = lo;
  for (const VecN& v : p.vertex_table()) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int attempt = 0; attempt < 8; ++attempt) {
    VecN o(n);
    for (int i = 0; i < n; ++i) o(i) = lo(i) + (hi(i) - lo(i)) * unit(rng);
    if (admissible(o)) return o;
  }
  throw Error(ErrorCode::DangerousCone,
              "no admissible base point found after 8 perturbations");
}

VecN ccm_polytope_closed_form(const SimplicialBoundary& p,
                              const Tolerance& tol) {
  const int n = p.dim();
  const double fac = factorial(n);
  double denom = 0.0;  // n! V(P)
  VecN nums = VecN::Zero(n);
  for (int f = 0; f < p.facet_count(); ++f) {
    const std::vector<VecN> verts = p.facet_vertices(f);
    denom += facet_matrix(verts).determinant();
    for (int i = 0; i < n; ++i) {
      nums(i) += facet_matrix(verts, i).determinant();
    }
  }
  if (std::abs(denom / fac) <= tol.eps_area) {
    throw Error(ErrorCode::ZeroVolume, "polytope volume below floor");
  }
  return nums / (2.0 * denom);
}

VecN ccm_polytope_closed_form(const SimplicialBoundary& p) {
  return ccm_polytope_closed_form(p, p.default_tolerance());
}

VecN cm_polytope(const SimplicialBoundary& p, const Tolerance& tol) {
  const int n = p.dim();
  const double fac = factorial(n);
  const double total = polytope_volume(p);
  if (std::abs(total) <= tol.eps_area) {
    throw Error(ErrorCode::ZeroVolume, "polytope volume below floor");
  }
  VecN acc = VecN::Zero(n);
  for (int f = 0; f < p.facet_count(); ++f) {
    const std::vector<VecN> verts = p.facet_vertices(f);
    const double vol = facet_matrix(verts).determinant() / fac;
    VecN centroid = VecN::Zero(n);  // origin cone: apex contributes zero
    for (const VecN& v : verts) centroid += v;
    centroid /= static_cast<double>(n + 1);
    acc += vol * centroid;
  }
  return acc / total;
}

VecN cm_polytope(const SimplicialBoundary& p) {
  return cm_polytope(p, p.default_tolerance());
}

VecN c_t_polytope(const SimplicialBoundary& p, CenterParameter t,
                  const Tolerance& tol) {
  return t.t * cm_polytope(p, tol) +
         (1.0 - t.t) * ccm_polytope_closed_form(p, tol);
}

VecN c_t_polytope(const SimplicialBoundary& p, CenterParameter t) {
  return c_t_polytope(p, t, p.default_tolerance());
}

VecN monge_point(const SimplicialBoundary& p, const Tolerance& tol) {
  const double n = static_cast<double>(p.dim());
  return c_t_polytope(p, CenterParameter{(n + 1.0) / (n - 1.0)}, tol);
}

VecN monge_point(const SimplicialBoundary& p) {
  return monge_point(p, p.default_tolerance());
}

VecN archimedes_combine_polytope(const SimplicialBoundary& q,
                                 const SimplicialBoundary& r,
                                 const Tolerance& tol) {
  if (q.dim() != r.dim()) {
    throw Error(ErrorCode::InvalidInput, "pieces of mixed dimension");
  }
  const double vq = polytope_volume(q);
  const double vr = polytope_volume(r);
  if (std::abs(vq) <= tol.eps_area || std::abs(vr) <= tol.eps_area) {
    throw Error(ErrorCode::ZeroVolumePiece,
                "a piece has zero volume; its contribution exists only as a "
                "weighted limit");
  }
  const std::array<WeightedPoint, 2> parts = {
      WeightedPoint{ccm_polytope_closed_form(q, tol), vq},
      WeightedPoint{ccm_polytope_closed_form(r, tol), vr}};
  return combine(parts, tol.eps_area).point;
}

VecN archimedes_combine_polytope(const SimplicialBoundary& q,
                                 const SimplicialBoundary& r) {
  const double diam = std::max(q.diameter(), r.diameter());
  return archimedes_combine_polytope(q, r, Tolerance::for_scale(diam * diam));
}

SimplicialBoundary polygon_boundary(const OrientedPolygon& p) {
  std::vector<VecN> verts;
  verts.reserve(p.size());
  for (const Vec2& v : p.vertices()) {
    VecN w(2);
    w << v.x(), v.y();
    verts.push_back(w);
  }
  std::vector<std::vector<int>> facets;
  facets.reserve(p.size());
  for (int i = 0; i < p.size(); ++i) {
    facets.push_back({i, (i + 1) % p.size()});
  }
  return SimplicialBoundary(2, std::move(verts), std::move(facets));
}

}  // namespace ccm
