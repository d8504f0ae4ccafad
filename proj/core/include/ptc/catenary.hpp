#pragma once

#include <span>
#include <vector>

#include "ptc/profile.hpp"
#include "ptc/solver.hpp"

namespace ptc {

/// Minimizer and minimum of c -> c cosh(1/c), recomputed by bisection on the
/// derivative rather than hard-coded (the reference decimals are truncated).
struct CatenaryConstants {
  double xi_inf;   // minimizer
  double eta_inf;  // minimum value; two boundary catenaries exist iff a > eta_inf
};
const CatenaryConstants& catenary_constants();

/// C_c(t) = c cosh(t/c).
double catenary_eval(double c, double t);

struct CatenaryParams {
  double c = 0.0;
  double a = 0.0;  // boundary value at t = +-1: c cosh(1/c) = a
  Branch branch = Branch::Plus;

  friend bool operator==(const CatenaryParams&, const CatenaryParams&) = default;
};
double catenary_eval(const CatenaryParams& params, double t);

/// Both roots of c cosh(1/c) = a, bracketed on either side of xi_inf.
/// Throws NoSolutionError / DegenerateDoubleError below / at the minimum.
std::pair<CatenaryParams, CatenaryParams> solve_catenary_boundary(double a);

struct PolylineVertex {
  double t = 0.0;
  double r = 0.0;

  friend bool operator==(const PolylineVertex&, const PolylineVertex&) = default;
};

/// A catenary-approximating polyline with its branch-matched reference
/// catenary and the signed per-vertex error report.
struct CatenaryFit {
  ProfileFamily family;
  int m = 0;
  double a = 0.0;
  Branch branch = Branch::Plus;
  std::vector<PolylineVertex> vertices;  // left to right, ends at (+-1, a)
  CatenaryParams reference;
  std::vector<double> per_vertex_error;  // r - C_c(t) per vertex
  double max_abs_error = 0.0;

  friend bool operator==(const CatenaryFit&, const CatenaryFit&) = default;
};

/// The canonical polyline for the given parity: ell = 2/(2m+1) (odd, vertex
/// abscissae +-(2k+1)/(2m+1)) or ell = 1/m (even, abscissae +-k/m), compared
/// vertexwise against the branch-matched catenary through (+-1, a).
CatenaryFit build_polyline(Parity parity, int m, double a, Branch branch,
                           const SolverConfig& cfg = {});

/// Sup-norm of polyline-minus-catenary over the whole edge set, not just the
/// vertices. On each edge the difference of the chord and the convex catenary
/// has at most one interior critical point, at t = c asinh(chord slope).
double sup_norm_error(const CatenaryFit& fit);

/// Numeric check of the threshold inequality: y cosh(1/y) exceeds the m-th
/// odd profile with ell = 2/(2m+1) on the grid (points must be >= 1/sqrt(2)),
/// and eta_inf exceeds the profile minimum nu.
bool verify_threshold_inequality(int m, std::span<const double> grid);

struct Rational {
  long long num = 0;
  long long den = 1;
};

/// |profile_{t*m}(x) - x cosh(t/x)| for each m in ms, with the canonical ell
/// for the parity. Throws DomainError when t*m is not an integer.
std::vector<double> profile_limit_errors(Parity parity, Rational t, double x,
                                         std::span<const int> ms);

}  // namespace ptc
