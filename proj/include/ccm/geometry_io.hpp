#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccm/core.hpp"

namespace ccm::io {

enum class GeometryKind { Polygon, Polytope, SphericalPolygon,
                          HyperboloidPolygon };

const char* geometry_kind_name(GeometryKind kind);

/// Parsed geometry input: {"kind": ..., "dim": n, "vertices": [[...]],
/// "facets": [[i,...]]} with 0-based indices and an optional string-valued
/// "metadata" object.
struct GeometryDocument {
  GeometryKind kind = GeometryKind::Polygon;
  int dim = 2;
  std::vector<std::vector<double>> vertices;
  std::vector<std::vector<int>> facets;  // polytope kind only
  std::map<std::string, std::string> metadata;
};

/// Parse a geometry document; schema violations throw ParseError.
GeometryDocument parse_geometry(const std::string& json_text);

/// One requested center: either coordinates (status "ok") or an error code
/// name, never both.
struct CenterValue {
  std::string status = "ok";
  std::vector<double> coords;
  std::optional<double> mass;  // spherical centers carry their mass

  bool ok() const { return status == "ok"; }
  bool operator==(const CenterValue&) const = default;
};

struct EulerLineReport {
  CenterValue ccm;
  CenterValue cm;
  std::optional<bool> degenerate;  // set when both anchors resolved

  bool operator==(const EulerLineReport&) const = default;
};

struct MinkowskiReport {
  std::string cls;
  double form_value = 0.0;
  std::vector<double> vector;
  std::optional<std::vector<double>> h2_point;

  bool operator==(const MinkowskiReport&) const = default;
};

struct CenterReport {
  std::string kind;
  int dim = 0;
  std::optional<double> measure;  // signed area / volume / spherical mass
  std::optional<CenterValue> ccm;
  std::optional<CenterValue> cm;
  std::optional<CenterValue> monge;
  std::vector<std::pair<double, CenterValue>> c_t;
  std::optional<EulerLineReport> euler;
  std::optional<MinkowskiReport> minkowski;

  bool any_error() const;
  bool operator==(const CenterReport&) const = default;
};

struct CentersOptions {
  std::vector<double> t_values;
  std::optional<VecN> base_point;  // overrides the closed form with the fan
  std::optional<double> eps_rel;
};

/// Compute every requested center for the document; per-center failures are
/// reported in place, malformed geometry throws.
CenterReport cmd_centers(const GeometryDocument& doc,
                         const CentersOptions& options);

/// Deterministic JSON with numbers at 17 significant digits.
std::string report_to_json(const CenterReport& report);

/// Inverse of report_to_json (round-trips exactly).
CenterReport report_from_json(const std::string& json_text);

}  // namespace ccm::io
