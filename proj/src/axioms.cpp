#include "ccm/axioms.hpp"

#include <cmath>

namespace ccm {

namespace {

constexpr double kPoleEps = 1e-12;

double safe_tan(double angle) {
  const double c = std::cos(angle);
  if (std::abs(c) <= kPoleEps) {
    throw Error(ErrorCode::PoleAngle, "tangent pole");
  }
  return std::sin(angle) / c;
}

}  // namespace

double euler_family_height(CenterParameter t, double alpha) {
  const double s2 = std::sin(2.0 * alpha);
  if (std::abs(s2) <= kPoleEps) {
    throw Error(ErrorCode::PoleAngle, "pole of cot(2 alpha)");
  }
  const double cot2a = std::cos(2.0 * alpha) / s2;
  return t.t * safe_tan(alpha) / 3.0 - (1.0 - t.t) * cot2a;
}

HeightFunction euler_family(CenterParameter t) {
  return [t](double alpha) { return euler_family_height(t, alpha); };
}

double kite_height(const HeightFunction& f, double alpha, double beta) {
  const double ta = safe_tan(alpha);
  const double tb = safe_tan(beta);
  if (std::abs(ta + tb) <= kPoleEps) {
    throw Error(ErrorCode::DegenerateKite, "tan(alpha) + tan(beta) vanishes");
  }
  return (f(alpha) * ta - f(beta) * tb) / (ta + tb);
}

double functional_eq_residual(const HeightFunction& f, double alpha,
                              double beta) {
  const double gamma = 0.5 * M_PI - alpha - beta;
  return kite_height(f, alpha, beta) + kite_height(f, beta, gamma) +
         kite_height(f, gamma, alpha);
}

double tangent_substitution(double alpha, double beta) {
  const double x = safe_tan(alpha);
  const double y = safe_tan(beta);
  if (std::abs(x + y) <= kPoleEps) {
    throw Error(ErrorCode::DegeneratePair, "tan(alpha) + tan(beta) vanishes");
  }
  return (1.0 - x * y) / (x + y);
}

}  // namespace ccm
