#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccm/core.hpp"

// Property suites exercising the theorems behind the library at desk scale.
// Every check is deterministic for a given seed and case count.
namespace ccm::verify {

struct CheckResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  double max_err = 0.0;  // worst observed value of the check metric
  double bound = 0.0;    // the metric's pass bound
  std::vector<std::string> diagnostics;

  bool passed() const { return failures == 0; }
};

// Base-point independence of the fan/cone constructions, metric
// |difference| / diameter over 3 admissible base points per shape.
CheckResult planar_o_independence(std::uint64_t seed, int cases);
CheckResult polytope_o_independence(std::uint64_t seed, int cases);

// Closed form against the fan/cone route at an admissible base point.
CheckResult planar_closed_vs_fan(std::uint64_t seed, int cases);
CheckResult polytope_closed_vs_fan(std::uint64_t seed, int cases);

// Archimedes combination: pieces recombine to the whole, for CCM, CM and a
// random C_t.
CheckResult archimedes_planar(std::uint64_t seed, int cases);
CheckResult archimedes_polytope(std::uint64_t seed, int cases);
// The altitude-bisection scenario: the zero-area piece raises an error
// instead of returning a shifted center, and the cut that keeps the flat
// vertex recovers the exact center.
CheckResult archimedes_hidden_triangle();

// Inscribed shapes: circumcenter of mass at the circumscribing center.
CheckResult inscribed_planar(std::uint64_t seed, int cases);
CheckResult inscribed_polytope(std::uint64_t seed, int cases);

// Equal-side polygons: circumcenter of mass meets the lamina center.
CheckResult equilateral_planar(std::uint64_t seed, int cases);
CheckResult equilateral_spherical(std::uint64_t seed, int cases);

// Sampled smooth ovals: error against a quadrature centroid decays
// quadratically (ratio e(n)/e(2n) near 4 for n = 64..256).
CheckResult continuous_limit_planar();
CheckResult continuous_limit_spherical();

// Functional-equation characterization of the Euler family: the family
// residual vanishes on an angle grid for random t, and the tan^2 witness
// is rejected at the x=1, y=2, z=-1/3 triple.
CheckResult euler_uniqueness(std::uint64_t seed, int grid, int t_samples);

// C_3 of a triangle against the altitude-intersection solve; C_2 of a
// tetrahedron against the Monge plane-intersection solve.
CheckResult orthocenter_triangles(std::uint64_t seed, int cases);
CheckResult monge_tetrahedra(std::uint64_t seed, int cases);

// Symmetry sensitivity of the generalized Euler line.
CheckResult symmetry_mirror(std::uint64_t seed, int cases);
CheckResult symmetry_rotational(std::uint64_t seed, int cases);
CheckResult symmetry_odd_side(std::uint64_t seed, int cases);

// Spherical apex independence and the gnomonic flat limit.
CheckResult spherical_w_independence(std::uint64_t seed, int cases);
CheckResult spherical_flat_limit();

// Witness configurations on the hyperboloid classify as time-like, null
// and space-like, stably under 1e-10 perturbation away from the null case.
CheckResult hyperbolic_witnesses();

// The n = 2 polytope code path reproduces the planar results.
CheckResult dimension_consistency(std::uint64_t seed, int cases);

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const CheckResult& c : checks) {
      if (!c.passed()) return false;
    }
    return true;
  }
};

std::vector<std::string> suite_names();

/// Run one named suite; throws UnknownSuite for unlisted names.
SuiteReport run_suite(const std::string& suite, std::uint64_t seed,
                      int cases);

/// Deterministic text rendering: one line per check plus a summary line.
std::string format_report(const SuiteReport& report);

}  // namespace ccm::verify
