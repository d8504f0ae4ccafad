#include "ptc/report.hpp"

#include <json.hpp>

#include "ptc/errors.hpp"
#include "ptc/version.hpp"

namespace ptc {

using nlohmann::json;

std::string parity_name(Parity parity) {
  return parity == Parity::Odd ? "odd" : "even";
}
std::string branch_name(Branch branch) {
  return branch == Branch::Plus ? "plus" : "minus";
}
std::string stability_name(Stability verdict) {
  return verdict == Stability::Stable ? "stable" : "not_positive_definite";
}

Parity parity_from_name(std::string_view name) {
  if (name == "odd") return Parity::Odd;
  if (name == "even") return Parity::Even;
  throw DomainError("unknown parity: " + std::string(name));
}
Branch branch_from_name(std::string_view name) {
  if (name == "plus") return Branch::Plus;
  if (name == "minus") return Branch::Minus;
  throw DomainError("unknown branch: " + std::string(name));
}
Stability stability_from_name(std::string_view name) {
  if (name == "stable") return Stability::Stable;
  if (name == "not_positive_definite") return Stability::NotPositiveDefinite;
  throw DomainError("unknown stability verdict: " + std::string(name));
}

RunReport make_run_report(Parity parity, int m, double a,
                          std::optional<double> ell_override, Branch branch,
                          const SolverConfig& cfg) {
  const double canonical = parity == Parity::Odd ? 2.0 / (2 * m + 1) : 1.0 / m;
  const double ell = ell_override.value_or(canonical);
  const ProfileFamily family{parity, ell};

  RunReport report;
  report.parity = parity;
  report.m = m;
  report.a = a;
  report.ell = ell;
  report.branch = branch;
  report.root_tol = cfg.root_tol;
  report.pair = solve_branches(family, m, a, cfg);
  report.surface = build_surface(report.pair, branch);
  report.leading_minors = assemble_hessian(report.surface).leading_minors;
  report.verdict = classify_stability(report.surface, cfg);
  report.version = std::string(kVersion);

  if (!ell_override) {
    // The polyline construction prescribes the canonical ell; a catenary fit
    // additionally needs a above the continuous threshold.
    try {
      const CatenaryFit fit = build_polyline(parity, m, a, branch, cfg);
      report.fit = FitSummary{fit.vertices, fit.per_vertex_error, fit.max_abs_error};
    } catch (const NoSolutionError&) {
    } catch (const DegenerateDoubleError&) {
    }
  }
  return report;
}

std::string report_to_json(const RunReport& report) {
  json fit = nullptr;
  if (report.fit) {
    json vertices = json::array();
    for (const auto& v : report.fit->vertices) vertices.push_back({v.t, v.r});
    fit = json{{"vertices", std::move(vertices)},
               {"errors", report.fit->errors},
               {"max_abs_error", report.fit->max_abs_error}};
  }
  const json doc{
      {"inputs",
       {{"parity", parity_name(report.parity)},
        {"m", report.m},
        {"a", report.a},
        {"ell", report.ell},
        {"branch", branch_name(report.branch)},
        {"root_tol", report.root_tol}}},
      {"branch_pair",
       {{"mu", report.pair.mu},
        {"nu", report.pair.nu},
        {"y_minus", report.pair.y_minus},
        {"y_plus", report.pair.y_plus}}},
      {"surface",
       {{"radii", report.surface.radii},
        {"area_over_pi", report.surface.area_over_pi}}},
      {"stability",
       {{"verdict", stability_name(report.verdict)},
        {"leading_minors", report.leading_minors}}},
      {"fit", std::move(fit)},
      {"meta", {{"version", report.version}}}};
  return doc.dump(2) + "\n";
}

RunReport report_from_json(std::string_view json_text) {
  const json doc = json::parse(json_text);
  RunReport report;
  const auto& inputs = doc.at("inputs");
  report.parity = parity_from_name(inputs.at("parity").get<std::string>());
  report.m = inputs.at("m").get<int>();
  report.a = inputs.at("a").get<double>();
  report.ell = inputs.at("ell").get<double>();
  report.branch = branch_from_name(inputs.at("branch").get<std::string>());
  report.root_tol = inputs.at("root_tol").get<double>();

  const ProfileFamily family{report.parity, report.ell};
  const auto& pair = doc.at("branch_pair");
  report.pair = BranchPair{family,
                           report.m,
                           report.a,
                           pair.at("mu").get<double>(),
                           pair.at("nu").get<double>(),
                           pair.at("y_minus").get<double>(),
                           pair.at("y_plus").get<double>()};

  const auto& surface = doc.at("surface");
  report.surface = PtcSurface{family,
                              report.m,
                              report.a,
                              report.branch,
                              surface.at("radii").get<std::vector<double>>(),
                              surface.at("area_over_pi").get<double>()};

  const auto& stability = doc.at("stability");
  report.verdict = stability_from_name(stability.at("verdict").get<std::string>());
  report.leading_minors = stability.at("leading_minors").get<std::vector<double>>();

  const auto& fit = doc.at("fit");
  if (!fit.is_null()) {
    FitSummary summary;
    for (const auto& v : fit.at("vertices"))
      summary.vertices.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
    summary.errors = fit.at("errors").get<std::vector<double>>();
    summary.max_abs_error = fit.at("max_abs_error").get<double>();
    report.fit = std::move(summary);
  }

  report.version = doc.at("meta").at("version").get<std::string>();
  return report;
}

}  // namespace ptc
