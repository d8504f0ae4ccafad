#pragma once

#include <span>
#include <vector>

#include "ptc/profile.hpp"

namespace ptc {

enum class Branch { Plus, Minus };

struct SolverConfig {
  double root_tol = 1e-12;  // absolute tolerance on the root argument
  int max_expand = 200;     // bracket growth/shrink steps
  double fd_step = 1e-6;    // finite-difference step for validation

  friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

/// The two solutions of profile_m(r) = a around the profile minimum (mu, nu).
struct BranchPair {
  ProfileFamily family;
  int m = 0;
  double a = 0.0;
  double mu = 0.0;       // argmin of the m-th profile
  double nu = 0.0;       // minimum value; solutions exist iff a > nu
  double y_minus = 0.0;  // root below mu
  double y_plus = 0.0;   // root above mu

  friend bool operator==(const BranchPair&, const BranchPair&) = default;
};

/// A symmetric piecewise-truncated-cone surface: the full palindromic radius
/// sequence (boundary radius a first and last) with its total lateral area
/// divided by pi.
struct PtcSurface {
  ProfileFamily family;
  int m = 0;
  double a = 0.0;
  Branch branch = Branch::Plus;
  std::vector<double> radii;
  double area_over_pi = 0.0;

  /// Distinct interior radii, center outward (profile values 0..m-1).
  std::vector<double> interior_radii() const;

  friend bool operator==(const PtcSurface&, const PtcSurface&) = default;
};

/// Lateral area over pi of one truncated cone band: (s+t) sqrt((t-s)^2 + ell^2).
double cone_area_element(double s, double t, double ell);

/// Half of (area/pi) of the symmetric surface as a function of the interior
/// radii, center first. Odd surfaces include the central cylinder band term
/// radii[0]*ell; the boundary cone closes against a.
double area_objective(const ProfileFamily& family, double a,
                      std::span<const double> radii);

/// Argmin and minimum (mu, nu) of the m-th profile, by bisection on the
/// strictly increasing derivative.
std::pair<double, double> find_minimum(const ProfileFamily& family, int m,
                                       const SolverConfig& cfg = {});

/// Solve profile_m(r) = a for both branches. Throws NoSolutionError when
/// a < nu and DegenerateDoubleError when |a - nu| <= 1e-10 max(1, a).
BranchPair solve_branches(const ProfileFamily& family, int m, double a,
                          const SolverConfig& cfg = {});

PtcSurface build_surface(const BranchPair& pair, Branch branch);
PtcSurface build_surface(const ProfileFamily& family, int m, double a,
                         Branch branch, const SolverConfig& cfg = {});

/// Max-norm of the central-difference gradient of the area objective at the
/// surface's interior radii. Vanishes (< 1e-8) at every built surface.
double surface_gradient_max_norm(const PtcSurface& surface, double step = 1e-6);

}  // namespace ptc
