#include "ccm/geometry_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ccm/planar.hpp"
#include "ccm/polytope.hpp"
#include "ccm/spherical.hpp"

#include "json.hpp"

namespace ccm::io {

namespace {

using nlohmann::json;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  // JSON requires a leading digit marker for special values; the library
  // never produces non-finite numbers here.
  return buf;
}

void write_array(std::ostringstream& out, const std::vector<double>& xs) {
  out << "[";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ",";
    out << num(xs[i]);
  }
  out << "]";
}

void write_center(std::ostringstream& out, const CenterValue& v) {
  out << "{\"status\":\"" << v.status << "\"";
  if (v.ok()) {
    out << ",\"coords\":";
    write_array(out, v.coords);
  }
  if (v.mass) out << ",\"mass\":" << num(*v.mass);
  out << "}";
}

std::vector<double> to_coords(const Vec2& v) { return {v.x(), v.y()}; }

std::vector<double> to_coords(const Vec3& v) {
  return {v.x(), v.y(), v.z()};
}

std::vector<double> to_coords(const VecN& v) {
  return {v.data(), v.data() + v.size()};
}

// Run one center computation, capturing library errors as a status.
template <typename Fn>
CenterValue capture(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    CenterValue v;
    v.status = e.code_name();
    return v;
  }
}

CenterReport polygon_report(const GeometryDocument& doc,
                            const CentersOptions& options) {
  std::vector<Vec2> verts;
  for (const std::vector<double>& v : doc.vertices) {
    verts.emplace_back(v[0], v[1]);
  }
  const OrientedPolygon p(std::move(verts));
  const Tolerance tol =
      p.default_tolerance(options.eps_rel.value_or(kDefaultEpsRel));

  CenterReport report;
  report.kind = geometry_kind_name(doc.kind);
  report.dim = 2;
  report.measure = p.signed_area();
  report.ccm = capture([&] {
    if (options.base_point) {
      const Vec2 o((*options.base_point)(0), (*options.base_point)(1));
      return CenterValue{"ok", to_coords(ccm_fan(p, o, tol)), {}};
    }
    return CenterValue{"ok", to_coords(ccm_closed_form(p, tol)), {}};
  });
  report.cm =
      capture([&] { return CenterValue{"ok", to_coords(cm_lamina(p, tol)), {}}; });
  report.monge = capture([&] {
    return CenterValue{
        "ok", to_coords(c_t(p, CenterParameter{3.0}, tol)), {}};
  });
  for (double t : options.t_values) {
    report.c_t.emplace_back(t, capture([&] {
      return CenterValue{"ok", to_coords(c_t(p, CenterParameter{t}, tol)),
                         {}};
    }));
  }
  EulerLineReport euler;
  euler.ccm = capture([&] {
    return CenterValue{"ok", to_coords(ccm_closed_form(p, tol)), {}};
  });
  euler.cm = *report.cm;
  if (euler.ccm.ok() && euler.cm.ok()) {
    const EulerLine line = euler_line(p, tol);
    euler.degenerate = line.degenerate;
  }
  report.euler = std::move(euler);
  return report;
}

CenterReport polytope_report(const GeometryDocument& doc,
                             const CentersOptions& options) {
  std::vector<VecN> verts;
  for (const std::vector<double>& v : doc.vertices) {
    VecN w(static_cast<Eigen::Index>(v.size()));
    for (size_t i = 0; i < v.size(); ++i) w(static_cast<Eigen::Index>(i)) = v[i];
    verts.push_back(std::move(w));
  }
  const SimplicialBoundary b(doc.dim, std::move(verts), doc.facets);
  const Tolerance tol =
      b.default_tolerance(options.eps_rel.value_or(kDefaultEpsRel));

  CenterReport report;
  report.kind = geometry_kind_name(doc.kind);
  report.dim = doc.dim;
  report.measure = polytope_volume(b);
  report.ccm = capture([&] {
    if (options.base_point) {
      return CenterValue{
          "ok", to_coords(ccm_polytope(b, *options.base_point, tol)), {}};
    }
    return CenterValue{"ok", to_coords(ccm_polytope_closed_form(b, tol)),
                       {}};
  });
  report.cm = capture(
      [&] { return CenterValue{"ok", to_coords(cm_polytope(b, tol)), {}}; });
  report.monge = capture([&] {
    return CenterValue{"ok", to_coords(monge_point(b, tol)), {}};
  });
  for (double t : options.t_values) {
    report.c_t.emplace_back(t, capture([&] {
      return CenterValue{
          "ok", to_coords(c_t_polytope(b, CenterParameter{t}, tol)), {}};
    }));
  }
  EulerLineReport euler;
  euler.ccm = capture([&] {
    return CenterValue{"ok", to_coords(ccm_polytope_closed_form(b, tol)),
                       {}};
  });
  euler.cm = *report.cm;
  if (euler.ccm.ok() && euler.cm.ok()) {
    VecN d(static_cast<Eigen::Index>(euler.ccm.coords.size()));
    for (size_t i = 0; i < euler.ccm.coords.size(); ++i) {
      d(static_cast<Eigen::Index>(i)) =
          euler.ccm.coords[i] - euler.cm.coords[i];
    }
    euler.degenerate = d.norm() < tol.eps_rel * b.diameter();
  }
  report.euler = std::move(euler);
  return report;
}

CenterReport spherical_report(const GeometryDocument& doc,
                              const CentersOptions& options) {
  std::vector<Vec3> verts;
  for (const std::vector<double>& v : doc.vertices) {
    verts.emplace_back(v[0], v[1], v[2]);
  }
  const double eps_rel = options.eps_rel.value_or(kDefaultEpsRel);
  const SphericalPolygon p(std::move(verts), eps_rel);

  CenterReport report;
  report.kind = geometry_kind_name(doc.kind);
  report.dim = 3;
  report.ccm = capture([&] {
    const MassedDirection md = spherical_ccm(p);
    return CenterValue{"ok", to_coords(md.direction), md.mass};
  });
  if (report.ccm->ok()) report.measure = *report.ccm->mass;
  report.cm = capture([&] {
    const MassedDirection md = spherical_lamina_cm(p);
    return CenterValue{"ok", to_coords(md.direction), md.mass};
  });
  for (double t : options.t_values) {
    CenterValue unsupported;
    unsupported.status = error_code_name(ErrorCode::UnsupportedKind);
    report.c_t.emplace_back(t, unsupported);
  }
  EulerLineReport euler;
  euler.ccm = *report.ccm;
  euler.cm = *report.cm;
  if (euler.ccm.ok() && euler.cm.ok()) {
    Vec3 a(euler.ccm.coords[0], euler.ccm.coords[1], euler.ccm.coords[2]);
    Vec3 b(euler.cm.coords[0], euler.cm.coords[1], euler.cm.coords[2]);
    euler.degenerate = (a - b).norm() < eps_rel;
  }
  report.euler = std::move(euler);
  return report;
}

CenterReport hyperboloid_report(const GeometryDocument& doc,
                                const CentersOptions& options) {
  std::vector<Vec3> verts;
  for (const std::vector<double>& v : doc.vertices) {
    verts.emplace_back(v[0], v[1], v[2]);
  }
  const double eps_rel = options.eps_rel.value_or(kDefaultEpsRel);
  const MinkowskiCcm result = minkowski_ccm(verts, eps_rel);

  CenterReport report;
  report.kind = geometry_kind_name(doc.kind);
  report.dim = 3;
  MinkowskiReport mk;
  mk.cls = minkowski_class_name(result.cls);
  mk.form_value = minkowski_form(result.vector);
  mk.vector = to_coords(result.vector);
  if (result.h2_point) mk.h2_point = to_coords(*result.h2_point);
  report.minkowski = std::move(mk);
  return report;
}

}  // namespace

const char* geometry_kind_name(GeometryKind kind) {
  switch (kind) {
    case GeometryKind::Polygon: return "polygon";
    case GeometryKind::Polytope: return "polytope";
    case GeometryKind::SphericalPolygon: return "spherical_polygon";
    case GeometryKind::HyperboloidPolygon: return "hyperboloid_polygon";
  }
  return "unknown";
}

GeometryDocument parse_geometry(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  GeometryDocument doc;
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "polygon") {
      doc.kind = GeometryKind::Polygon;
    } else if (kind == "polytope") {
      doc.kind = GeometryKind::Polytope;
    } else if (kind == "spherical_polygon") {
      doc.kind = GeometryKind::SphericalPolygon;
    } else if (kind == "hyperboloid_polygon") {
      doc.kind = GeometryKind::HyperboloidPolygon;
    } else {
      throw Error(ErrorCode::ParseError, "unknown kind '" + kind + "'");
    }
    doc.dim = j.value("dim", doc.kind == GeometryKind::Polygon ? 2 : 3);
    if (!j.contains("vertices") || !j["vertices"].is_array() ||
        j["vertices"].empty()) {
      throw Error(ErrorCode::ParseError, "missing vertices");
    }
    const size_t expected =
        doc.kind == GeometryKind::Polytope ? static_cast<size_t>(doc.dim)
                                           : (doc.kind == GeometryKind::Polygon
                                                  ? 2u
                                                  : 3u);
    for (const json& row : j["vertices"]) {
      if (!row.is_array() || row.size() != expected) {
        throw Error(ErrorCode::ParseError,
                    "vertex rows must be rectangular with the kind's "
                    "dimension");
      }
      std::vector<double> coords;
      for (const json& x : row) {
        if (!x.is_number()) {
          throw Error(ErrorCode::ParseError, "vertex entries must be numbers");
        }
        coords.push_back(x.get<double>());
        if (!std::isfinite(coords.back())) {
          throw Error(ErrorCode::ParseError, "non-finite vertex entry");
        }
      }
      doc.vertices.push_back(std::move(coords));
    }
    if (doc.kind == GeometryKind::Polytope) {
      if (!j.contains("facets") || !j["facets"].is_array() ||
          j["facets"].empty()) {
        throw Error(ErrorCode::ParseError, "polytope needs facets");
      }
      for (const json& row : j["facets"]) {
        if (!row.is_array()) {
          throw Error(ErrorCode::ParseError, "facets must be index arrays");
        }
        std::vector<int> f;
        for (const json& x : row) {
          if (!x.is_number_integer()) {
            throw Error(ErrorCode::ParseError, "facet indices must be "
                                               "integers");
          }
          const long long idx = x.get<long long>();
          if (idx < 0 || idx >= static_cast<long long>(doc.vertices.size())) {
            throw Error(ErrorCode::ParseError, "facet index out of range");
          }
          f.push_back(static_cast<int>(idx));
        }
        doc.facets.push_back(std::move(f));
      }
    }
    if (j.contains("metadata")) {
      for (const auto& [key, value] : j["metadata"].items()) {
        if (value.is_string()) {
          doc.metadata[key] = value.get<std::string>();
        }
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return doc;
}

bool CenterReport::any_error() const {
  auto bad = [](const std::optional<CenterValue>& v) {
    return v && !v->ok();
  };
  if (bad(ccm) || bad(cm) || bad(monge)) return true;
  for (const auto& [t, v] : c_t) {
    if (!v.ok()) return true;
  }
  if (euler && (!euler->ccm.ok() || !euler->cm.ok())) return true;
  return false;
}

CenterReport cmd_centers(const GeometryDocument& doc,
                         const CentersOptions& options) {
  switch (doc.kind) {
    case GeometryKind::Polygon: return polygon_report(doc, options);
    case GeometryKind::Polytope: return polytope_report(doc, options);
    case GeometryKind::SphericalPolygon:
      return spherical_report(doc, options);
    case GeometryKind::HyperboloidPolygon:
      return hyperboloid_report(doc, options);
  }
  throw Error(ErrorCode::UnsupportedKind, "unhandled geometry kind");
}

std::string report_to_json(const CenterReport& report) {
  std::ostringstream out;
  out << "{\"kind\":\"" << report.kind << "\",\"dim\":" << report.dim;
  if (report.measure) out << ",\"measure\":" << num(*report.measure);
  out << ",\"centers\":{";
  bool first = true;
  auto emit = [&](const char* name, const std::optional<CenterValue>& v) {
    if (!v) return;
    if (!first) out << ",";
    first = false;
    out << "\"" << name << "\":";
    write_center(out, *v);
  };
  emit("ccm", report.ccm);
  emit("cm", report.cm);
  emit("monge", report.monge);
  if (!report.c_t.empty()) {
    if (!first) out << ",";
    first = false;
    out << "\"c_t\":[";
    for (size_t i = 0; i < report.c_t.size(); ++i) {
      if (i) out << ",";
      out << "{\"t\":" << num(report.c_t[i].first) << ",\"center\":";
      write_center(out, report.c_t[i].second);
      out << "}";
    }
    out << "]";
  }
  out << "}";
  if (report.euler) {
    out << ",\"euler_line\":{\"ccm\":";
    write_center(out, report.euler->ccm);
    out << ",\"cm\":";
    write_center(out, report.euler->cm);
    if (report.euler->degenerate) {
      out << ",\"degenerate\":"
          << (*report.euler->degenerate ? "true" : "false");
    }
    out << "}";
  }
  if (report.minkowski) {
    out << ",\"minkowski\":{\"class\":\"" << report.minkowski->cls
        << "\",\"form_value\":" << num(report.minkowski->form_value)
        << ",\"vector\":";
    write_array(out, report.minkowski->vector);
    if (report.minkowski->h2_point) {
      out << ",\"h2_point\":";
      write_array(out, *report.minkowski->h2_point);
    }
    out << "}";
  }
  out << "}";
  return out.str();
}

namespace {

CenterValue center_from_json(const json& j) {
  CenterValue v;
  v.status = j.at("status").get<std::string>();
  if (j.contains("coords")) {
    for (const json& x : j["coords"]) v.coords.push_back(x.get<double>());
  }
  if (j.contains("mass")) v.mass = j["mass"].get<double>();
  return v;
}

}  // namespace

CenterReport report_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
    CenterReport report;
    report.kind = j.at("kind").get<std::string>();
    report.dim = j.at("dim").get<int>();
    if (j.contains("measure")) report.measure = j["measure"].get<double>();
    const json& centers = j.at("centers");
    if (centers.contains("ccm")) report.ccm = center_from_json(centers["ccm"]);
    if (centers.contains("cm")) report.cm = center_from_json(centers["cm"]);
    if (centers.contains("monge")) {
      report.monge = center_from_json(centers["monge"]);
    }
    if (centers.contains("c_t")) {
      for (const json& entry : centers["c_t"]) {
        report.c_t.emplace_back(entry.at("t").get<double>(),
                                center_from_json(entry.at("center")));
      }
    }
    if (j.contains("euler_line")) {
      EulerLineReport euler;
      euler.ccm = center_from_json(j["euler_line"].at("ccm"));
      euler.cm = center_from_json(j["euler_line"].at("cm"));
      if (j["euler_line"].contains("degenerate")) {
        euler.degenerate = j["euler_line"]["degenerate"].get<bool>();
      }
      report.euler = std::move(euler);
    }
    if (j.contains("minkowski")) {
      MinkowskiReport mk;
      mk.cls = j["minkowski"].at("class").get<std::string>();
      mk.form_value = j["minkowski"].at("form_value").get<double>();
      for (const json& x : j["minkowski"].at("vector")) {
        mk.vector.push_back(x.get<double>());
      }
      if (j["minkowski"].contains("h2_point")) {
        std::vector<double> pt;
        for (const json& x : j["minkowski"]["h2_point"]) {
          pt.push_back(x.get<double>());
        }
        mk.h2_point = std::move(pt);
      }
      report.minkowski = std::move(mk);
    }
    return report;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace ccm::io
