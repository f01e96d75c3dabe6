#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "filling/disk_model.hpp"
#include "filling/errors.hpp"
#include "filling/isoperim.hpp"
#include "filling/map_io.hpp"
#include "filling/polygeom.hpp"
#include "filling/reducer.hpp"
#include "filling/report.hpp"
#include "filling/surfmap.hpp"

using namespace filling;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

// "2" or "2..5"
std::pair<int, int> parse_genus_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int g = std::stoi(s, &used);
      if (used != s.size()) throw UsageError("bad genus: " + s);
      return {g, g};
    }
    const int lo = std::stoi(s.substr(0, dots), &used);
    const int hi = std::stoi(s.substr(dots + 2));
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("bad genus: " + s);
  }
}

std::string fixed(double v, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

int cmd_minlen(const std::string& genus, std::optional<double> systole, const std::string& format) {
  const auto [lo, hi] = parse_genus_range(genus);
  if (lo < 2 || hi < lo) throw UsageError("genus must be at least 2 (got " + genus + ")");
  nlohmann::json rows = nlohmann::json::array();
  std::string text = "g\tedges\tside\tperimeter\tL(g)";
  if (systole) text += "\tkiss_lower";
  text += "\n";
  for (int g = lo; g <= hi; ++g) {
    const auto r = polygeom::extremal_report(g, systole);
    text += std::to_string(g) + "\t" + std::to_string(r.edge_count) + "\t" + fixed(r.polygon_side) +
            "\t" + fixed(r.polygon_perimeter) + "\t" + fixed(r.min_filling_length);
    nlohmann::json row = {{"genus", g},
                          {"edges", r.edge_count},
                          {"side", r.polygon_side},
                          {"perimeter", r.polygon_perimeter},
                          {"min_filling_length", r.min_filling_length}};
    if (r.kissing_lower_bound) {
      text += "\t" + fixed(*r.kissing_lower_bound, 6);
      row["kissing_lower_bound"] = *r.kissing_lower_bound;
    }
    text += "\n";
    rows.push_back(row);
  }
  std::cout << (format == "json" ? rows.dump(2) + "\n" : text);
  return 0;
}

int cmd_polygon(double n, std::optional<double> theta, std::optional<double> area,
                const std::string& format) {
  if (theta.has_value() == area.has_value()) throw UsageError("give exactly one of --theta, --area");
  const auto p = theta ? polygeom::RegularPolygonSpec::from_angle(n, *theta)
                       : polygeom::RegularPolygonSpec::from_area(n, *area);
  const nlohmann::json j = {{"n", p.n},
                            {"theta", p.theta},
                            {"area", p.area},
                            {"perimeter", p.perimeter()},
                            {"side", p.side()},
                            {"circumradius", p.circumradius()},
                            {"degenerate", p.degenerate()}};
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& [k, v] : j.items()) std::cout << k << "=" << v.dump() << "\n";
  }
  return 0;
}

int cmd_verify(std::string which, const isoperim::GridSpec& grid, std::optional<int> n,
               const std::string& format, const std::string& output) {
  if (which.empty()) which = "all";
  std::vector<CheckReport> reports;
  try {
    reports = isoperim::run_checks(which, grid, n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(format == "json" ? to_json(reports).dump(2) + "\n" : to_key_value(reports), output);
  const bool ok = all_pass(reports);
  std::cerr << (ok ? "PASS" : "FAIL") << " (" << reports.size() << " checks)\n";
  return ok ? 0 : kExitFail;
}

int cmd_gluing(int genus, const std::string& svg, const std::string& emit_map, const std::string& format) {
  if (genus < 2) throw UsageError("genus must be at least 2");
  const auto v = surfmap::verify_canonical(genus);
  const auto& r = v.report;
  if (format == "json") {
    nlohmann::json j = {{"genus", genus},
                        {"word", surfmap::canonical_word(genus).to_string()},
                        {"V", r.V}, {"E", r.E}, {"F", r.F},
                        {"euler", r.euler},
                        {"orientable", r.orientable},
                        {"curve_components", r.curve_components},
                        {"self_intersections", r.self_intersections},
                        {"face_effective_degrees", r.face_effective_degrees},
                        {"geodesic_length", v.geodesic_length},
                        {"failures", v.failures},
                        {"pass", v.pass}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "genus=" << genus << "\n"
              << "word=" << surfmap::canonical_word(genus).to_string() << "\n"
              << "V=" << r.V << " E=" << r.E << " F=" << r.F << " euler=" << r.euler << "\n"
              << "orientable=" << (r.orientable ? "true" : "false") << "\n"
              << "curve_components=" << r.curve_components << "\n"
              << "self_intersections=" << r.self_intersections << "\n"
              << "face_effective_degree=" << r.face_effective_degrees.front() << "\n"
              << "geodesic_length=" << fixed(v.geodesic_length) << "\n";
    for (const auto& f : v.failures) std::cout << "failure: " << f << "\n";
    std::cout << "pass=" << (v.pass ? "true" : "false") << "\n";
  }
  if (!svg.empty()) write_text_file(svg, surfmap::gluing_svg(surfmap::canonical_word(genus), std::numbers::pi / 2));
  if (!emit_map.empty()) {
    const auto map = surfmap::build_map(surfmap::canonical_word(genus));
    write_text_file(emit_map, map_to_json(map, genus).dump(2) + "\n");
  }
  return v.pass ? 0 : kExitFail;
}

int cmd_reduce(const std::string& path, std::optional<int> genus, bool no_shortcut,
               const std::string& format, const std::string& output) {
  const auto j = read_json_file(path);
  const auto map = map_from_json(j);
  if (!genus) genus = genus_from_json(j);
  if (!genus) throw UsageError("genus not given and not recorded in " + path);
  const auto input = reducer::validate_input(map, *genus);
  reducer::ReduceOptions options;
  options.accept_satisfying_input = !no_shortcut;
  const auto cert = reducer::reduce(input, options);
  emit(format == "json" ? reducer::to_json(cert).dump(2) + "\n" : reducer::to_text(cert), output);
  return cert.ok() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Filling curves on hyperbolic surfaces: minimal length, isoperimetric checks, reduction"};
  app.require_subcommand(1);
  std::string format = "text";
  const auto formats = CLI::IsMember({"text", "json"});

  auto* minlen = app.add_subcommand("minlen", "Minimal filling length table");
  std::string genus_range;
  std::optional<double> systole;
  minlen->add_option("--genus", genus_range, "Genus or range lo..hi")->required();
  minlen->add_option("--sys", systole, "Systole for the kissing-number bound")->check(CLI::PositiveNumber);
  minlen->add_option("--format", format, "Output format")->check(formats);

  auto* polygon = app.add_subcommand("polygon", "Regular hyperbolic polygon quantities");
  double n = 0;
  std::optional<double> theta, area;
  polygon->add_option("--n", n, "Number of sides")->required()->check(CLI::Range(3.0, 1e9));
  auto* theta_opt = polygon->add_option("--theta", theta, "Interior angle");
  auto* area_opt = polygon->add_option("--area", area, "Area");
  theta_opt->excludes(area_opt);
  polygon->add_option("--format", format, "Output format")->check(formats);

  auto* verify = app.add_subcommand("verify", "Isoperimetric verification checks");
  std::string which;
  bool verify_all = false;
  isoperim::GridSpec grid;
  std::optional<int> verify_n, grid_density;
  std::string output;
  verify->add_option("which", which, "all or one of the selectors")->check(CLI::IsMember([] {
    auto s = isoperim::check_selectors();
    s.push_back("all");
    return s;
  }()));
  verify->add_flag("--all", verify_all, "Run every check");
  verify->add_option("--grid", grid_density, "Grid points per axis for two-dimensional sweeps")
      ->check(CLI::PositiveNumber);
  verify->add_option("--a-steps", grid.a_steps, "Area steps per n (overrides --grid)")->check(CLI::NonNegativeNumber);
  verify->add_option("--x-steps", grid.x_steps, "Split steps per area (overrides --grid)")->check(CLI::NonNegativeNumber);
  verify->add_option("--samples", grid.samples, "One-dimensional sample count")->check(CLI::NonNegativeNumber);
  verify->add_option("--instances", grid.instances, "Random instances")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", grid.seed, "Random seed");
  verify->add_option("--n", verify_n, "Edge count for lemma33/lemma34")->check(CLI::Range(3, 100000));
  verify->add_option("--n-min", grid.n_min, "Smallest edge count in n sweeps")->check(CLI::NonNegativeNumber);
  verify->add_option("--n-max", grid.n_max, "Largest edge count in n sweeps")->check(CLI::NonNegativeNumber);
  verify->add_option("--workers", grid.workers, "Worker threads (0: all cores)");
  verify->add_option("--tolerance", grid.tolerance, "Inequality tolerance")->check(CLI::NonNegativeNumber);
  verify->add_option("--angle-tolerance", grid.angle_tolerance, "Angle tolerance for merge steps")->check(CLI::NonNegativeNumber);
  verify->add_option("--format", format, "Output format")->check(formats);
  verify->add_option("-o,--output", output, "Write the report here instead of stdout");

  auto* gluing = app.add_subcommand("gluing", "Canonical gluing word verification");
  int genus = 0;
  std::string svg, emit_map;
  gluing->add_option("--genus", genus)->required();
  gluing->add_option("--svg", svg, "Write the glued polygon as SVG");
  gluing->add_option("--emit-map", emit_map, "Write the combinatorial map as JSON");
  gluing->add_option("--format", format, "Output format")->check(formats);

  auto* reduce = app.add_subcommand("reduce", "Reduce a filling multi-curve to a certified subgraph");
  std::string map_path;
  std::optional<int> reduce_genus;
  bool no_shortcut = false;
  reduce->add_option("--map", map_path, "Map interchange JSON")->required()->check(CLI::ExistingFile);
  reduce->add_option("--genus", reduce_genus, "Surface genus (default: from the map file)");
  reduce->add_flag("--no-shortcut", no_shortcut, "Reduce even when the input already satisfies the bound");
  reduce->add_option("--format", format, "Output format")->check(formats);
  reduce->add_option("-o,--output", output, "Write the certificate here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*minlen) return cmd_minlen(genus_range, systole, format);
    if (*polygon) return cmd_polygon(n, theta, area, format);
    if (*verify) {
      if (grid_density) grid.a_steps = grid.x_steps = *grid_density;
      if (verify_all && !which.empty() && which != "all") throw UsageError("--all conflicts with " + which);
      return cmd_verify(which, grid, verify_n, format, output);
    }
    if (*gluing) return cmd_gluing(genus, svg, emit_map, format);
    if (*reduce) return cmd_reduce(map_path, reduce_genus, no_shortcut, format, output);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
