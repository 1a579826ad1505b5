#include "ccm/spherical.hpp"

#include <algorithm>
#include <cmath>

namespace ccm {

namespace {

// Absolute floor for vector-sum norms on the unit sphere.
constexpr double kSphereEps = 1e-12;

void require_unit(const Vec3& v, double eps_rel, const char* what) {
  if (!v.allFinite() || std::abs(v.norm() - 1.0) >= eps_rel) {
    throw Error(ErrorCode::InvalidInput,
                std::string(what) + " is not a unit vector");
  }
}

// d / sin d weight of the lamina formula, with the limit value 1 at d = 0.
// Throws for antipodal pairs where the weight diverges.
double arc_over_sin(const Vec3& a, const Vec3& b) {
  const double s = a.cross(b).norm();
  const double c = a.dot(b);
  if (s <= kSphereEps && c < 0.0) {
    throw Error(ErrorCode::AntipodalPair,
                "antipodal vertices: d/sin(d) diverges");
  }
  if (s <= 0.0) return 1.0;
  return std::atan2(s, c) / s;
}

}  // namespace

const char* minkowski_class_name(MinkowskiClass c) {
  switch (c) {
    case MinkowskiClass::SpaceLike: return "SpaceLike";
    case MinkowskiClass::TimeLike: return "TimeLike";
    case MinkowskiClass::Null: return "Null";
  }
  return "Unknown";
}

SphericalPolygon::SphericalPolygon(std::vector<Vec3> vertices, double eps_rel)
    : verts_(std::move(vertices)) {
  const int n = static_cast<int>(verts_.size());
  if (n < 3) {
    throw Error(ErrorCode::InvalidPolygon,
                "spherical polygon needs at least 3 vertices");
  }
  for (const Vec3& v : verts_) require_unit(v, eps_rel, "polygon vertex");
  for (int i = 0; i < n; ++i) {
    const Vec3& u = verts_[i];
    const Vec3& v = verts_[(i + 1) % n];
    if ((u - v).norm() < eps_rel) {
      throw Error(ErrorCode::InvalidPolygon,
                  "consecutive vertices coincide");
    }
    if ((u + v).norm() < eps_rel) {
      throw Error(ErrorCode::InvalidPolygon,
                  "consecutive vertices are antipodal");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      diameter_ = std::max(diameter_, (verts_[j] - verts_[i]).norm());
    }
  }
}

const Vec3& SphericalPolygon::vertex(int i) const {
  const int n = size();
  int k = i % n;
  if (k < 0) k += n;
  return verts_[k];
}

double spherical_distance(const Vec3& a, const Vec3& b) {
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

Vec3 spherical_circumcenter_raw(const Vec3& a, const Vec3& b, const Vec3& c) {
  return (b - a).cross(c - a);
}

MassedDirection spherical_circumcenter(const Vec3& a, const Vec3& b,
                                       const Vec3& c) {
  require_unit(a, kDefaultEpsRel, "vertex");
  require_unit(b, kDefaultEpsRel, "vertex");
  require_unit(c, kDefaultEpsRel, "vertex");
  const Vec3 raw = spherical_circumcenter_raw(a, b, c);
  const double norm = raw.norm();
  if (norm <= kSphereEps) {
    throw Error(ErrorCode::GreatCircleDegenerate,
                "vertices lie on a great circle through a degenerate "
                "configuration");
  }
  return {raw / norm, norm};
}

MassedDirection spherical_mass_center(
    std::span<const MassedDirection> points) {
  Vec3 sum = Vec3::Zero();
  for (const MassedDirection& p : points) {
    require_unit(p.direction, kDefaultEpsRel, "direction");
    if (!(p.mass >= 0.0)) {
      throw Error(ErrorCode::InvalidInput, "negative mass");
    }
    sum += p.raw();
  }
  const double norm = sum.norm();
  if (norm <= kSphereEps) {
    throw Error(ErrorCode::BalancedConfiguration,
                "mass-weighted vector sum vanishes");
  }
  return {sum / norm, norm};
}

Vec3 spherical_triangle_lamina_raw(const Vec3& a, const Vec3& b,
                                   const Vec3& c) {
  return a.cross(b) * arc_over_sin(a, b) + b.cross(c) * arc_over_sin(b, c) +
         c.cross(a) * arc_over_sin(c, a);
}

MassedDirection spherical_triangle_lamina_cm(const Vec3& a, const Vec3& b,
                                             const Vec3& c) {
  require_unit(a, kDefaultEpsRel, "vertex");
  require_unit(b, kDefaultEpsRel, "vertex");
  require_unit(c, kDefaultEpsRel, "vertex");
  const Vec3 raw = spherical_triangle_lamina_raw(a, b, c);
  const double norm = raw.norm();
  if (norm <= kSphereEps) {
    throw Error(ErrorCode::GreatCircleDegenerate,
                "lamina vector vanishes");
  }
  return {raw / norm, norm};
}

namespace {

// Cyclic sum of v_i x v_{i+1}, shifted by the vertex mean. The shift is an
// exact identity (the extra terms telescope) and avoids cancellation for
// small polygons.
Vec3 cyclic_cross_sum(std::span<const Vec3> verts) {
  Vec3 mean = Vec3::Zero();
  for (const Vec3& v : verts) mean += v;
  mean /= static_cast<double>(verts.size());
  Vec3 sum = Vec3::Zero();
  for (size_t i = 0; i < verts.size(); ++i) {
    const Vec3& u = verts[i];
    const Vec3& v = verts[(i + 1) % verts.size()];
    sum += (u - mean).cross(v - mean);
  }
  return sum;
}

}  // namespace

MassedDirection spherical_ccm(const SphericalPolygon& p) {
  const Vec3 sum = cyclic_cross_sum(p.vertices());
  const double norm = sum.norm();
  if (norm <= kSphereEps) {
    throw Error(ErrorCode::DegeneratePolygon,
                "cross-product sum vanishes; no convention for this polygon");
  }
  return {sum / norm, norm};
}

MassedDirection spherical_ccm_fan(const SphericalPolygon& p, const Vec3& w) {
  require_unit(w, kDefaultEpsRel, "apex");
  Vec3 sum = Vec3::Zero();
  for (int i = 0; i < p.size(); ++i) {
    // Raw circumcenter vector of the fan triangle; a vanishing one carries
    // zero mass and is skipped.
    sum += spherical_circumcenter_raw(w, p.vertex(i), p.vertex(i + 1));
  }
  const double norm = sum.norm();
  if (norm <= kSphereEps) {
    throw Error(ErrorCode::DegeneratePolygon, "fan sum vanishes");
  }
  return {sum / norm, norm};
}

MassedDirection spherical_lamina_cm(const SphericalPolygon& p, const Vec3& w) {
  require_unit(w, kDefaultEpsRel, "apex");
  Vec3 sum = Vec3::Zero();
  for (int i = 0; i < p.size(); ++i) {
    sum += spherical_triangle_lamina_raw(w, p.vertex(i), p.vertex(i + 1));
  }
  const double norm = sum.norm();
  if (norm <= kSphereEps) {
    throw Error(ErrorCode::BalancedConfiguration, "lamina sum vanishes");
  }
  return {sum / norm, norm};
}

MassedDirection spherical_lamina_cm(const SphericalPolygon& p) {
  Vec3 mean = Vec3::Zero();
  for (const Vec3& v : p.vertices()) mean += v;
  std::vector<Vec3> candidates;
  if (mean.norm() > kSphereEps) candidates.push_back(mean.normalized());
  candidates.push_back(p.vertex(0));
  candidates.push_back((p.vertex(0) + p.vertex(1)).normalized());
  for (const Vec3& w : candidates) {
    try {
      return spherical_lamina_cm(p, w);
    } catch (const Error&) {
      continue;
    }
  }
  throw Error(ErrorCode::BalancedConfiguration,
              "no apex yields a usable lamina fan");
}

MassedDirection spherical_curve_ccm(std::span<const Vec3> samples) {
  if (samples.size() < 16) {
    throw Error(ErrorCode::InvalidInput,
                "curve approximation needs at least 16 samples");
  }
  const SphericalPolygon p(std::vector<Vec3>(samples.begin(), samples.end()));
  return spherical_ccm(p);
}

VecN generalized_cross(std::span<const VecN> vs) {
  const int n = static_cast<int>(vs.size());
  if (n < 1) {
    throw Error(ErrorCode::InvalidInput, "generalized cross of no vectors");
  }
  for (const VecN& v : vs) {
    if (v.size() != n + 1 || !v.allFinite()) {
      throw Error(ErrorCode::InvalidInput,
                  "generalized cross needs n vectors of dimension n+1");
    }
  }
  // Cofactor expansion of det(v_1, ..., v_n, xi) along the xi column:
  // component r of the result is (-1)^{r+n} times the minor with row r
  // removed.
  VecN out(n + 1);
  Eigen::MatrixXd minor(n, n);
  for (int r = 0; r <= n; ++r) {
    for (int j = 0; j < n; ++j) {
      int rr = 0;
      for (int i = 0; i <= n; ++i) {
        if (i == r) continue;
        minor(rr++, j) = vs[j](i);
      }
    }
    const double sign = ((r + n) % 2 == 0) ? 1.0 : -1.0;
    out(r) = sign * minor.determinant();
  }
  return out;
}

MassedDirectionN spherical_ccm_polytope(const SphericalBoundary& p) {
  const int n = p.sphere_dim;
  if (n < 2 || n > 6) {
    throw Error(ErrorCode::UnsupportedDimension,
                "supported sphere dimensions are 2..6");
  }
  const int nv = static_cast<int>(p.vertices.size());
  for (const VecN& v : p.vertices) {
    if (v.size() != n + 1 || !v.allFinite() ||
        std::abs(v.norm() - 1.0) >= kDefaultEpsRel) {
      throw Error(ErrorCode::InvalidInput, "vertices must be unit vectors");
    }
  }
  VecN sum = VecN::Zero(n + 1);
  std::vector<VecN> facet;
  for (const std::vector<int>& f : p.facets) {
    if (static_cast<int>(f.size()) != n) {
      throw Error(ErrorCode::InvalidInput,
                  "facets must have exactly n vertices");
    }
    facet.clear();
    for (int idx : f) {
      if (idx < 0 || idx >= nv) {
        throw Error(ErrorCode::InvalidInput, "facet index out of range");
      }
      facet.push_back(p.vertices[idx]);
    }
    sum += generalized_cross(facet);
  }
  const double norm = sum.norm();
  if (norm <= kSphereEps) {
    throw Error(ErrorCode::DegenerateBoundary, "facet cross sum vanishes");
  }
  return {sum / norm, norm};
}

double minkowski_form(const Vec3& v) {
  return v.z() * v.z() - v.x() * v.x() - v.y() * v.y();
}

MinkowskiCcm minkowski_ccm(std::span<const Vec3> polygon, double eps_rel) {
  if (polygon.size() < 3) {
    throw Error(ErrorCode::InvalidPolygon,
                "hyperboloid polygon needs at least 3 vertices");
  }
  for (const Vec3& v : polygon) {
    const double q = minkowski_form(v);
    if (!v.allFinite() || v.z() <= 0.0 ||
        std::abs(q - 1.0) >= eps_rel * std::max(1.0, v.squaredNorm())) {
      throw Error(ErrorCode::ConstraintViolation,
                  "vertex is not on the upper hyperboloid sheet");
    }
  }
  // The Minkowski cross product is J * (euclidean cross) with
  // J = diag(-1,-1,1), so the cyclic sum is J times the euclidean sum.
  const Vec3 euclid = cyclic_cross_sum(polygon);
  MinkowskiCcm result;
  result.vector = Vec3(-euclid.x(), -euclid.y(), euclid.z());
  const double q = minkowski_form(result.vector);
  const double threshold = eps_rel * result.vector.squaredNorm();
  if (q > threshold) {
    result.cls = MinkowskiClass::TimeLike;
    Vec3 point = result.vector / std::sqrt(q);
    if (point.z() < 0.0) point = -point;
    result.h2_point = point;
  } else if (q < -threshold) {
    result.cls = MinkowskiClass::SpaceLike;
  } else {
    result.cls = MinkowskiClass::Null;
  }
  return result;
}

}  // namespace ccm
