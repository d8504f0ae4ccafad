#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptc/catenary.hpp"
#include "ptc/solver.hpp"
#include "ptc/stability.hpp"

namespace ptc {

/// Fit fields serialized in a run report: vertices, signed errors, max error.
struct FitSummary {
  std::vector<PolylineVertex> vertices;
  std::vector<double> errors;
  double max_abs_error = 0.0;

  friend bool operator==(const FitSummary&, const FitSummary&) = default;
};

/// Full result of one solve run. Serializes losslessly: write -> read -> equal.
struct RunReport {
  // inputs
  Parity parity = Parity::Odd;
  int m = 0;
  double a = 0.0;
  double ell = 0.0;
  Branch branch = Branch::Plus;
  double root_tol = 0.0;
  // outputs
  BranchPair pair;
  PtcSurface surface;
  Stability verdict = Stability::Stable;
  std::vector<double> leading_minors;
  std::optional<FitSummary> fit;  // absent when a <= eta_inf or ell is overridden
  // provenance
  std::string version;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Solve, classify and fit in one pass. ell_override disables the catenary
/// fit (the polyline construction prescribes ell = 2/(2m+1) resp. 1/m).
RunReport make_run_report(Parity parity, int m, double a,
                          std::optional<double> ell_override, Branch branch,
                          const SolverConfig& cfg = {});

/// JSON with top-level keys inputs, branch_pair, surface, stability, fit,
/// meta. Deterministic byte output for a fixed report.
std::string report_to_json(const RunReport& report);
RunReport report_from_json(std::string_view json_text);

std::string parity_name(Parity parity);
std::string branch_name(Branch branch);
std::string stability_name(Stability verdict);
Parity parity_from_name(std::string_view name);
Branch branch_from_name(std::string_view name);
Stability stability_from_name(std::string_view name);

}  // namespace ptc
