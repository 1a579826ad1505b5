#pragma once

#include <functional>

#include "ccm/planar.hpp"

namespace ccm {

/// Signed height of a center above the base of an isosceles triangle with
/// base length 2 and base angle alpha. Any admissible center satisfies
/// f(pi/3) = 1/sqrt(3).
using HeightFunction = std::function<double(double)>;

/// Height function of the Euler-line family:
/// t * tan(alpha)/3 + (1-t) * (-cot(2 alpha)),
/// i.e. the lamina center of mass at t = 1 and the circumcenter of mass at
/// t = 0. Throws PoleAngle near the poles of cot(2 alpha) (alpha near 0 or
/// pi/2).
double euler_family_height(CenterParameter t, double alpha);

/// The same as a callable height function.
HeightFunction euler_family(CenterParameter t);

/// Signed height of the center of a kite glued from two isosceles triangles
/// with base angles alpha (above) and beta (below):
/// (f(alpha) tan(alpha) - f(beta) tan(beta)) / (tan(alpha) + tan(beta)).
/// Throws DegenerateKite when tan(alpha) + tan(beta) vanishes.
double kite_height(const HeightFunction& f, double alpha, double beta);

/// Residual of the functional equation characterizing admissible centers:
/// the cyclic three-term sum of kite heights over (alpha, beta,
/// gamma = pi/2 - alpha - beta). Vanishes identically on the Euler family.
/// Evaluated algebraically wherever the tangents and denominators are
/// finite, which includes triples with negative gamma. Throws PoleAngle at
/// tangent poles or vanishing denominators.
double functional_eq_residual(const HeightFunction& f, double alpha,
                              double beta);

/// The tangent elimination z = (1 - x y)/(x + y) for x = tan(alpha),
/// y = tan(beta); equals tan(pi/2 - alpha - beta). Throws DegeneratePair
/// when x + y vanishes, PoleAngle at a tangent pole.
double tangent_substitution(double alpha, double beta);

}  // namespace ccm
