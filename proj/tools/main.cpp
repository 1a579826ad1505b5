#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ccm/geometry_io.hpp"
#include "ccm/svg_render.hpp"
#include "ccm/verify.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) {
    throw ccm::Error(ccm::ErrorCode::ParseError,
                     "cannot open input file '" + path + "'");
  }
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

ccm::VecN parse_base_point(const std::string& text) {
  std::vector<double> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      coords.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ccm::Error(ccm::ErrorCode::ParseError,
                       "bad base point component '" + item + "'");
    }
  }
  if (coords.size() < 2) {
    throw ccm::Error(ccm::ErrorCode::ParseError,
                     "base point needs at least two coordinates");
  }
  ccm::VecN v(static_cast<Eigen::Index>(coords.size()));
  for (size_t i = 0; i < coords.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = coords[i];
  }
  return v;
}

std::optional<double> env_eps_rel() {
  const char* env = std::getenv("CCM_EPS_REL");
  if (!env) return std::nullopt;
  try {
    return std::stod(env);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circumcenter of mass, generalized Euler line and friends"};
  app.require_subcommand(1);

  std::string input = "-";
  std::vector<double> t_values;
  std::string base_point_text;
  double eps_rel = 0.0;
  bool has_eps_rel = false;
  std::string format = "json";
  bool fan = false;
  bool euler = false;

  CLI::App* centers = app.add_subcommand(
      "centers", "Compute the requested centers of a geometry document");
  centers->add_option("input", input, "input file or - for stdin");
  centers->add_option("--t", t_values, "C_t parameter (repeatable)")
      ->type_size(1)
      ->allow_extra_args(false);
  centers->add_option("--base-point", base_point_text,
                      "comma-separated base point; switches the CCM to the "
                      "fan/cone route");
  centers
      ->add_option("--eps-rel", eps_rel, "relative tolerance override")
      ->each([&](const std::string&) { has_eps_rel = true; });
  centers->add_option("--format", format, "json or svg")
      ->check(CLI::IsMember({"json", "svg"}));
  centers->add_flag("--fan", fan, "svg format: draw the fan triangulation");
  centers->add_flag("--euler", euler, "svg format: draw the Euler line");

  CLI::App* render = app.add_subcommand(
      "render", "Render a polygon document as a deterministic SVG figure");
  render->add_option("input", input, "input file or - for stdin");
  render->add_flag("--fan", fan, "draw the fan triangulation");
  render->add_flag("--euler", euler, "draw the Euler line");
  render->add_option("--base-point", base_point_text, "fan base point");
  render->add_option("--eps-rel", eps_rel, "relative tolerance override")
      ->each([&](const std::string&) { has_eps_rel = true; });

  std::string suite;
  std::uint64_t seed = 1;
  int cases = 100;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run a built-in property suite");
  verify->add_option("--suite", suite, "suite name")->required();
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--cases", cases, "number of cases");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(verify)) {
      const ccm::verify::SuiteReport report =
          ccm::verify::run_suite(suite, seed, cases);
      std::cout << ccm::verify::format_report(report);
      return report.passed() ? 0 : 1;
    }

    ccm::io::CentersOptions options;
    options.t_values = t_values;
    if (!base_point_text.empty()) {
      options.base_point = parse_base_point(base_point_text);
    }
    if (has_eps_rel) {
      options.eps_rel = eps_rel;
    } else if (auto env = env_eps_rel()) {
      options.eps_rel = *env;
    }

    const ccm::io::GeometryDocument doc =
        ccm::io::parse_geometry(read_input(input));

    if (app.got_subcommand(render) ||
        (app.got_subcommand(centers) && format == "svg")) {
      ccm::io::RenderOptions ropt;
      ropt.fan = fan;
      ropt.euler = euler;
      ropt.eps_rel = options.eps_rel;
      if (options.base_point && options.base_point->size() == 2) {
        ropt.base_point = ccm::Vec2((*options.base_point)(0),
                                    (*options.base_point)(1));
      }
      std::cout << ccm::io::render_svg(doc, ropt);
      return 0;
    }

    const ccm::io::CenterReport report = ccm::io::cmd_centers(doc, options);
    std::cout << ccm::io::report_to_json(report) << "\n";
    return report.any_error() ? 2 : 0;
  } catch (const ccm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
