#include "ccm/core.hpp"

#include <algorithm>
#include <cmath>

namespace ccm {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::AllCoincident: return "AllCoincident";
    case ErrorCode::ZeroTotalMass: return "ZeroTotalMass";
    case ErrorCode::DangerousTriangulation: return "DangerousTriangulation";
    case ErrorCode::ZeroArea: return "ZeroArea";
    case ErrorCode::ParallelBisectors: return "ParallelBisectors";
    case ErrorCode::InvalidCut: return "InvalidCut";
    case ErrorCode::ZeroAreaPiece: return "ZeroAreaPiece";
    case ErrorCode::InvalidPolygon: return "InvalidPolygon";
    case ErrorCode::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorCode::DangerousCone: return "DangerousCone";
    case ErrorCode::ZeroVolume: return "ZeroVolume";
    case ErrorCode::ZeroVolumePiece: return "ZeroVolumePiece";
    case ErrorCode::InvalidBoundary: return "InvalidBoundary";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::GreatCircleDegenerate: return "GreatCircleDegenerate";
    case ErrorCode::BalancedConfiguration: return "BalancedConfiguration";
    case ErrorCode::AntipodalPair: return "AntipodalPair";
    case ErrorCode::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorCode::DegenerateBoundary: return "DegenerateBoundary";
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::PoleAngle: return "PoleAngle";
    case ErrorCode::DegenerateKite: return "DegenerateKite";
    case ErrorCode::DegeneratePair: return "DegeneratePair";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

const char* degeneracy_class_name(DegeneracyClass c) {
  switch (c) {
    case DegeneracyClass::NonDegenerate: return "NonDegenerate";
    case DegeneracyClass::SafeDegenerate: return "SafeDegenerate";
    case DegeneracyClass::DangerousDegenerate: return "DangerousDegenerate";
  }
  return "Unknown";
}

double Triangle::squared_diameter() const {
  return std::max({(b - a).squaredNorm(), (c - b).squaredNorm(),
                   (a - c).squaredNorm()});
}

double signed_area(const Triangle& t) {
  return 0.5 * cross2(t.b - t.a, t.c - t.a);
}

Vec2 circumcenter(const Triangle& t, const Tolerance& tol) {
  if (std::abs(signed_area(t)) <= tol.eps_area) {
    throw Error(ErrorCode::Degenerate,
                "triangle area below floor; circumcenter may be at infinity");
  }
  // Perpendicular bisector of a-b: (b - a) . x = (|b|^2 - |a|^2) / 2,
  // intersected with the bisector of a-c.
  Eigen::Matrix2d m;
  m.row(0) = (t.b - t.a).transpose();
  m.row(1) = (t.c - t.a).transpose();
  const Vec2 rhs(0.5 * (t.b.squaredNorm() - t.a.squaredNorm()),
                 0.5 * (t.c.squaredNorm() - t.a.squaredNorm()));
  return m.partialPivLu().solve(rhs);
}

Vec2 circumcenter(const Triangle& t) {
  return circumcenter(t, t.default_tolerance());
}

Circumradius circumradius(const Triangle& t) {
  const double dab = (t.b - t.a).norm();
  const double dbc = (t.c - t.b).norm();
  const double dca = (t.a - t.c).norm();
  if (dab == 0.0 && dbc == 0.0 && dca == 0.0) {
    throw Error(ErrorCode::AllCoincident,
                "all three vertices coincide; circumradius undefined");
  }
  // Exactly repeated vertex: the limiting circle through the two distinct
  // locations has them as a diameter.
  if (dab == 0.0) return {false, 0.5 * dbc};
  if (dbc == 0.0) return {false, 0.5 * dab};
  if (dca == 0.0) return {false, 0.5 * dab};
  const double doubled_area = std::abs(cross2(t.b - t.a, t.c - t.a));
  if (doubled_area == 0.0) return {true, 0.0};  // collinear, distinct
  const double r = dab * dbc * dca / (2.0 * doubled_area);
  if (!std::isfinite(r)) return {true, 0.0};
  return {false, r};
}

DegeneracyClass classify_degeneracy(const Triangle& t, const Tolerance& tol) {
  if (std::abs(signed_area(t)) > tol.eps_area) {
    return DegeneracyClass::NonDegenerate;
  }
  Circumradius r;
  try {
    r = circumradius(t);
  } catch (const Error&) {
    // A point triangle has a bounded (zero-radius) limit circle.
    return DegeneracyClass::SafeDegenerate;
  }
  if (r.infinite || r.value > 1.0 / tol.eps_rel) {
    return DegeneracyClass::DangerousDegenerate;
  }
  return DegeneracyClass::SafeDegenerate;
}

DegeneracyClass classify_degeneracy(const Triangle& t) {
  return classify_degeneracy(t, t.default_tolerance());
}

WeightedPoint combine(std::span<const WeightedPoint> points,
                      double mass_floor) {
  if (points.empty()) {
    throw Error(ErrorCode::ZeroTotalMass, "empty combination");
  }
  const Eigen::Index dim = points.front().point.size();
  double total = 0.0;
  VecN weighted = VecN::Zero(dim);
  for (const WeightedPoint& wp : points) {
    if (wp.point.size() != dim) {
      throw Error(ErrorCode::InvalidInput,
                  "weighted points of mixed dimension");
    }
    total += wp.mass;
    weighted += wp.mass * wp.point;
  }
  if (std::abs(total) <= mass_floor) {
    throw Error(ErrorCode::ZeroTotalMass, "total mass below floor");
  }
  return {weighted / total, total};
}

WeightedPoint combine(std::span<const WeightedPoint> points) {
  double abs_sum = 0.0;
  for (const WeightedPoint& wp : points) abs_sum += std::abs(wp.mass);
  return combine(points, kEpsAreaScale * abs_sum);
}

}  // namespace ccm
