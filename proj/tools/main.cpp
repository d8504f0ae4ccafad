// Command-line front end: solve, table, plot, mesh and verify subcommands.
// Exit codes: 0 success, 2 usage, 3 domain/bracket errors, 4 no solution or
// degenerate boundary, 5 failed verification checks.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptc/catenary.hpp"
#include "ptc/errors.hpp"
#include "ptc/mesh.hpp"
#include "ptc/report.hpp"
#include "ptc/stability.hpp"
#include "ptc/svg.hpp"
#include "ptc/table.hpp"
#include "ptc/version.hpp"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNoSolution = 4;
constexpr int kExitVerifyFailed = 5;

struct CommonArgs {
  std::string parity = "odd";
  int m = 1;
  double a = 2.0;
  std::optional<double> ell;
  std::string branch = "plus";
  double root_tol = 1e-12;
  std::string format;
  std::string out;
};

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  file << content;
}

void emit_error(const std::string& kind, const std::string& message,
                const json& extra = json::object()) {
  json doc{{"error", {{"kind", kind}, {"message", message}}}};
  for (const auto& [key, value] : extra.items()) doc["error"][key] = value;
  std::cout << doc.dump(2) << "\n";
}

void require_format(const CommonArgs& args, const std::string& expected) {
  if (!args.format.empty() && args.format != expected)
    throw CLI::ValidationError("--format", "this subcommand emits " + expected);
}

ptc::SolverConfig config_for(const CommonArgs& args) {
  ptc::SolverConfig cfg;
  cfg.root_tol = args.root_tol;
  return cfg;
}

int run_solve(const CommonArgs& args) {
  require_format(args, "json");
  const ptc::RunReport report = ptc::make_run_report(
      ptc::parity_from_name(args.parity), args.m, args.a, args.ell,
      ptc::branch_from_name(args.branch), config_for(args));
  write_output(args.out, ptc::report_to_json(report));
  return 0;
}

int run_table(const CommonArgs& args, int m_max) {
  require_format(args, "csv");
  const auto rows = ptc::comparison_table(ptc::parity_from_name(args.parity),
                                          args.a, m_max, config_for(args));
  write_output(args.out, ptc::to_csv(rows));
  return 0;
}

int run_plot(const CommonArgs& args, bool overlay) {
  require_format(args, "svg");
  const ptc::CatenaryFit fit =
      ptc::build_polyline(ptc::parity_from_name(args.parity), args.m, args.a,
                          ptc::branch_from_name(args.branch), config_for(args));
  ptc::SvgOptions options;
  options.overlay_catenary = overlay;
  write_output(args.out, ptc::render_polyline_svg(fit, options));
  return 0;
}

int run_mesh(const CommonArgs& args, int segments) {
  require_format(args, "obj");
  const double canonical =
      args.parity == "odd" ? 2.0 / (2 * args.m + 1) : 1.0 / args.m;
  const ptc::ProfileFamily family{ptc::parity_from_name(args.parity),
                                  args.ell.value_or(canonical)};
  const ptc::PtcSurface surface =
      ptc::build_surface(family, args.m, args.a,
                         ptc::branch_from_name(args.branch), config_for(args));
  ptc::MeshSpec spec;
  spec.segments_per_circle = segments;
  write_output(args.out, ptc::to_obj(ptc::build_revolution_mesh(surface, spec)));
  return 0;
}

json check_det_identity(int m_max) {
  double worst = 0.0;
  for (const double ell : {2.0 / 3.0, 2.0 / 7.0, 0.1}) {
    const ptc::ProfileFamily family{ptc::Parity::Odd, ell};
    worst = std::max(worst, ptc::determinant_identity_max_error(family, m_max));
  }
  return json{{"name", "det-identity"},
              {"max_rel_err", worst},
              {"pass", worst < 1e-9}};
}

json check_lemma51(int m_max) {
  std::vector<double> grid(100);
  const double lo = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < grid.size(); ++i)
    grid[i] = lo + (10.0 - lo) * static_cast<double>(i) / (grid.size() - 1);

  bool pass = true;
  std::vector<double> gaps;  // eta_inf - nu_m per m, for inspection
  const double eta = ptc::catenary_constants().eta_inf;
  for (int m = 1; m <= m_max; ++m) {
    pass = pass && ptc::verify_threshold_inequality(m, grid);
    const ptc::ProfileFamily family{ptc::Parity::Odd, 2.0 / (2 * m + 1)};
    gaps.push_back(eta - ptc::find_minimum(family, m).second);
  }
  const double min_gap = *std::min_element(gaps.begin(), gaps.end());
  return json{{"name", "lemma51"},
              {"min_gap", min_gap},
              {"gaps", std::move(gaps)},
              {"pass", pass && min_gap > 0.0}};
}

json check_profile_limit(double a, const std::vector<int>& ms) {
  const auto [c_minus, c_plus] = ptc::solve_catenary_boundary(a);
  (void)c_minus;
  const ptc::Rational t{1, 1};

  json detail;
  bool pass = true;
  for (const ptc::Parity parity : {ptc::Parity::Even, ptc::Parity::Odd}) {
    const auto errors = ptc::profile_limit_errors(parity, t, c_plus.c, ms);
    bool decreasing = true;
    for (std::size_t i = 1; i < errors.size(); ++i)
      decreasing = decreasing && errors[i] < errors[i - 1];
    const bool small_tail =
        ms.empty() || ms.back() < 100 || errors.back() < 1e-3;
    pass = pass && decreasing && small_tail;
    detail[ptc::parity_name(parity) + "_errors"] = errors;
  }
  detail["name"] = "profile-limit";
  detail["pass"] = pass;
  return detail;
}

int run_verify(double a, int m_max, const std::vector<int>& ms,
               std::vector<std::string> checks, const std::string& out) {
  if (checks.empty()) checks = {"det-identity", "lemma51", "profile-limit"};

  json results = json::array();
  for (const auto& name : checks) {
    if (name == "det-identity") {
      results.push_back(check_det_identity(m_max));
    } else if (name == "lemma51") {
      results.push_back(check_lemma51(m_max));
    } else if (name == "profile-limit") {
      results.push_back(check_profile_limit(a, ms));
    } else {
      throw CLI::ValidationError("--checks", "unknown check: " + name);
    }
  }

  bool all_pass = true;
  for (const auto& r : results) all_pass = all_pass && r.at("pass").get<bool>();
  const json doc{{"checks", std::move(results)}, {"all_pass", all_pass}};
  write_output(out, doc.dump(2) + "\n");
  return all_pass ? 0 : kExitVerifyFailed;
}

void add_common_options(CLI::App* cmd, CommonArgs& args, bool with_branch = true) {
  cmd->add_option("--parity", args.parity, "Surface parity")
      ->check(CLI::IsMember({"odd", "even"}));
  cmd->add_option("--a", args.a, "Boundary radius")->required();
  cmd->add_option("--root-tol", args.root_tol, "Root tolerance on the argument")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", args.format, "Output format");
  cmd->add_option("--out", args.out, "Output path (stdout when omitted)");
  if (with_branch)
    cmd->add_option("--branch", args.branch, "Solution branch")
        ->check(CLI::IsMember({"plus", "minus"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Piecewise-truncated-cone minimal surfaces approximating "
               "catenoids, with catenary-approximating polylines"};
  app.set_version_flag("--version", std::string(ptc::kVersion));
  app.require_subcommand(1);

  CommonArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve one surface and report JSON");
  add_common_options(solve, solve_args);
  solve->add_option("--m", solve_args.m, "Half-count of cones")
      ->required()
      ->check(CLI::PositiveNumber);
  double solve_ell = 0.0;
  auto* solve_ell_opt =
      solve->add_option("--ell", solve_ell, "Cone height override")
          ->check(CLI::PositiveNumber);

  CommonArgs table_args;
  int table_m_max = 3;
  auto* table = app.add_subcommand("table", "Polyline-vs-catenary CSV table");
  add_common_options(table, table_args, /*with_branch=*/false);
  table->add_option("--m-max", table_m_max, "Largest m")
      ->required()
      ->check(CLI::PositiveNumber);

  CommonArgs plot_args;
  bool overlay = false;
  auto* plot = app.add_subcommand("plot", "SVG polyline plot");
  add_common_options(plot, plot_args);
  plot->add_option("--m", plot_args.m, "Half-count of cones")
      ->required()
      ->check(CLI::PositiveNumber);
  plot->add_flag("--overlay-catenary", overlay, "Overlay the reference catenary");

  CommonArgs mesh_args;
  int segments = 64;
  auto* mesh = app.add_subcommand("mesh", "OBJ mesh of the surface of revolution");
  add_common_options(mesh, mesh_args);
  mesh->add_option("--m", mesh_args.m, "Half-count of cones")
      ->required()
      ->check(CLI::PositiveNumber);
  double mesh_ell = 0.0;
  auto* mesh_ell_opt = mesh->add_option("--ell", mesh_ell, "Cone height override")
                           ->check(CLI::PositiveNumber);
  mesh->add_option("--segments", segments, "Segments per circle")
      ->check(CLI::Range(3, 1 << 20));

  double verify_a = 2.0;
  int verify_m_max = 8;
  std::vector<int> verify_ms = {10, 100, 1000};
  std::vector<std::string> verify_checks;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "Batch identity/inequality checks");
  verify->add_option("--checks", verify_checks, "Checks to run")
      ->delimiter(',');
  verify->add_option("--a", verify_a, "Boundary radius");
  verify->add_option("--m-max", verify_m_max, "Largest m")
      ->check(CLI::PositiveNumber);
  verify->add_option("--m", verify_ms, "m values for profile-limit")
      ->delimiter(',');
  verify->add_option("--out", verify_out, "Output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve->parsed()) {
      if (solve_ell_opt->count() > 0) solve_args.ell = solve_ell;
      return run_solve(solve_args);
    }
    if (table->parsed()) return run_table(table_args, table_m_max);
    if (plot->parsed()) return run_plot(plot_args, overlay);
    if (mesh->parsed()) {
      if (mesh_ell_opt->count() > 0) mesh_args.ell = mesh_ell;
      return run_mesh(mesh_args, segments);
    }
    if (verify->parsed())
      return run_verify(verify_a, verify_m_max, verify_ms, verify_checks,
                        verify_out);
  } catch (const CLI::ValidationError& e) {
    emit_error("usage", e.what());
    return kExitUsage;
  } catch (const ptc::NoSolutionError& e) {
    emit_error("no_solution", e.what(), {{"a", e.a}, {"nu", e.nu}});
    return kExitNoSolution;
  } catch (const ptc::DegenerateDoubleError& e) {
    emit_error("degenerate_double", e.what(),
               {{"a", e.a}, {"mu", e.mu}, {"nu", e.nu}});
    return kExitNoSolution;
  } catch (const ptc::DomainError& e) {
    emit_error("domain", e.what());
    return kExitDomain;
  } catch (const ptc::BracketError& e) {
    emit_error("bracket", e.what());
    return kExitDomain;
  } catch (const ptc::StationarityError& e) {
    emit_error("stationarity", e.what());
    return kExitDomain;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 1;
  }
  return 0;
}
