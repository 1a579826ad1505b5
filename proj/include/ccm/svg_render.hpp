#pragma once

#include <optional>
#include <string>

#include "ccm/geometry_io.hpp"

namespace ccm::io {

struct RenderOptions {
  bool fan = false;    // draw the fan triangulation with its circumcenters
  bool euler = false;  // draw the generalized Euler line and its anchors
  std::optional<Vec2> base_point;
  std::optional<double> eps_rel;
};

/// Deterministic SVG figure of a polygon document: outline, optional fan
/// triangles with circumcenter markers, optional Euler line with CCM/CM
/// markers. The view box fits the drawn geometry with a 5% margin and the
/// output carries no timestamps, so identical input gives identical bytes.
/// Only the polygon kind is supported; other kinds throw UnsupportedKind.
std::string render_svg(const GeometryDocument& doc,
                       const RenderOptions& options);

}  // namespace ccm::io
