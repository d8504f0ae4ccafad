#pragma once

#include <vector>

#include "ptc/profile.hpp"
#include "ptc/solver.hpp"

namespace ptc {

/// Closed-form second partials of the cone band area S(s,t) =
/// (s+t) sqrt((t-s)^2 + ell^2). The mixed partial is
/// -ell^2 (s+t) / ((t-s)^2 + ell^2)^{3/2}; ss and tt follow from the first
/// partials and are gated behind a finite-difference validation test.
struct SecondPartials {
  double ss;
  double st;
  double tt;
};
SecondPartials area_second_partials(double s, double t, double ell);

enum class Stability { Stable, NotPositiveDefinite };

/// Symmetric tridiagonal Hessian of the area objective at a critical point,
/// with the leading principal minors evaluated by the three-term recurrence
/// det H_n = H_{n,n} det H_{n-1} - H_{n-1,n}^2 det H_{n-2}.
struct HessianTridiag {
  int m = 0;
  std::vector<double> diag;            // H_{i,i}, i = 1..m
  std::vector<double> offdiag;         // H_{i,i+1}, i = 1..m-1; negative on the domain
  std::vector<double> leading_minors;  // det of the top-left n x n blocks
  double extended_corner = 0.0;        // corner with the boundary replaced by profile_m(y)

  bool positive_definite() const;  // Sylvester: all leading minors > 0

  friend bool operator==(const HessianTridiag&, const HessianTridiag&) = default;
};

/// Hessian of the area objective at the surface's interior radii. The surface
/// must be a critical point (as produced by build_surface); entries match the
/// finite-difference Hessian of the objective.
HessianTridiag assemble_hessian(const PtcSurface& surface);

/// Both sides of the extended-Hessian determinant identity
///   det H^_m(y) = (-1)^m H^_{1,2} ... H^_{m,m+1} profile_m'(y),
/// the left side via the tridiagonal recurrence, the right side via the
/// signed off-diagonal product.
struct DeterminantIdentity {
  double lhs;
  double rhs;
  double rel_err;  // |lhs - rhs| / max(|lhs|, |rhs|); 0 when both vanish
};
DeterminantIdentity determinant_identity_check(const ProfileFamily& family,
                                               int m, double y);

/// Max relative identity error over deterministic 20-point y-grids that
/// straddle the profile minimum, for every profile index up to m_max.
double determinant_identity_max_error(const ProfileFamily& family, int m_max,
                                      int points_per_side = 10);

/// Sylvester classification of the assembled Hessian. Refuses (throws
/// StationarityError) when the finite-difference gradient max-norm exceeds
/// 1e-6: the classification is meaningless off the critical set.
Stability classify_stability(const PtcSurface& surface,
                             const SolverConfig& cfg = {});

}  // namespace ptc
