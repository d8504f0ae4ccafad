#include "ptc/stability.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ptc/errors.hpp"

namespace ptc {

namespace {

constexpr double kStationarityTol = 1e-6;

std::vector<double> leading_minors_of(const std::vector<double>& diag,
                                      const std::vector<double>& offdiag) {
  std::vector<double> minors(diag.size());
  double det_prev2 = 1.0;  // det of the empty block
  double det_prev1 = 1.0;
  for (std::size_t n = 0; n < diag.size(); ++n) {
    const double off2 = n > 0 ? offdiag[n - 1] * offdiag[n - 1] : 0.0;
    const double det = diag[n] * det_prev1 - off2 * det_prev2;
    minors[n] = det;
    det_prev2 = det_prev1;
    det_prev1 = det;
  }
  return minors;
}

}  // namespace

SecondPartials area_second_partials(double s, double t, double ell) {
  if (!(s > 0.0) || !(t > 0.0) || !(ell > 0.0))
    throw DomainError("area_second_partials: radii and height must be positive");
  const double d = t - s;
  const double l2 = ell * ell;
  const double r2 = d * d + l2;
  const double r3 = r2 * std::sqrt(r2);
  return SecondPartials{(-2.0 * d * d * d + (3.0 * s - t) * l2) / r3,
                        -l2 * (s + t) / r3,
                        (2.0 * d * d * d + (3.0 * t - s) * l2) / r3};
}

bool HessianTridiag::positive_definite() const {
  return std::all_of(leading_minors.begin(), leading_minors.end(),
                     [](double det) { return det > 0.0; });
}

HessianTridiag assemble_hessian(const PtcSurface& surface) {
  const int m = surface.m;
  if (m < 1) throw DomainError("assemble_hessian: surface has no interior radii");
  const auto ys = surface.interior_radii();
  const double ell = surface.family.ell;

  std::vector<double> diag(static_cast<std::size_t>(m), 0.0);
  std::vector<double> offdiag(static_cast<std::size_t>(std::max(0, m - 1)), 0.0);
  for (int i = 0; i < m; ++i) {
    const double left = ys[static_cast<std::size_t>(i)];
    const double right = i + 1 < m ? ys[static_cast<std::size_t>(i + 1)] : surface.a;
    const auto sp = area_second_partials(left, right, ell);
    diag[static_cast<std::size_t>(i)] += sp.ss;
    if (i + 1 < m) {
      diag[static_cast<std::size_t>(i + 1)] += sp.tt;
      offdiag[static_cast<std::size_t>(i)] = sp.st;
    }
  }

  // Corner entry of the extended Hessian: the boundary radius replaced by the
  // m-th profile value at the center radius.
  const double hm = profile_value(surface.family, m, ys[0]);
  double extended = area_second_partials(ys[static_cast<std::size_t>(m - 1)], hm, ell).ss;
  if (m >= 2)
    extended +=
        area_second_partials(ys[static_cast<std::size_t>(m - 2)], ys[static_cast<std::size_t>(m - 1)], ell).tt;

  HessianTridiag hess;
  hess.m = m;
  hess.leading_minors = leading_minors_of(diag, offdiag);
  hess.diag = std::move(diag);
  hess.offdiag = std::move(offdiag);
  hess.extended_corner = extended;
  return hess;
}

DeterminantIdentity determinant_identity_check(const ProfileFamily& family,
                                               int m, double y) {
  if (m < 1) throw DomainError("determinant_identity_check: m must be >= 1");
  family.require_in_domain(y);
  const double ell = family.ell;
  const auto values = profile_values(family, m + 1, y);  // profiles 0..m

  std::vector<double> diag(static_cast<std::size_t>(m), 0.0);
  std::vector<double> offdiag(static_cast<std::size_t>(std::max(0, m - 1)), 0.0);
  double extension = 0.0;  // H_{m,m+1}, not an element of the m x m matrix
  for (int i = 0; i < m; ++i) {
    const auto sp = area_second_partials(values[static_cast<std::size_t>(i)],
                                         values[static_cast<std::size_t>(i + 1)], ell);
    diag[static_cast<std::size_t>(i)] += sp.ss;
    if (i + 1 < m) {
      diag[static_cast<std::size_t>(i + 1)] += sp.tt;
      offdiag[static_cast<std::size_t>(i)] = sp.st;
    } else {
      extension = sp.st;
    }
  }

  const double lhs = leading_minors_of(diag, offdiag).back();

  double product = extension;
  for (const double off : offdiag) product *= off;
  const double sign = m % 2 == 0 ? 1.0 : -1.0;
  const double rhs = sign * product * profile_derivative(family, m, y, 1);

  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  const double rel = scale > 0.0 ? std::abs(lhs - rhs) / scale : 0.0;
  return DeterminantIdentity{lhs, rhs, rel};
}

double determinant_identity_max_error(const ProfileFamily& family, int m_max,
                                      int points_per_side) {
  if (m_max < 1 || points_per_side < 1)
    throw DomainError("determinant_identity_max_error: bad range");
  double worst = 0.0;
  for (int m = 1; m <= m_max; ++m) {
    const auto [mu, nu] = find_minimum(family, m);
    const double pole = family.pole();
    // Straddle the minimum: near mu both sides vanish and the relative error
    // is cancellation-dominated, so the grids stop short of it.
    const double lo_begin = pole + 0.2 * (mu - pole);
    const double lo_end = 0.92 * mu;
    const double hi_begin = 1.1 * mu;
    const double hi_end = 4.0 * mu;
    for (int i = 0; i < points_per_side; ++i) {
      const double f = points_per_side > 1
                           ? static_cast<double>(i) / (points_per_side - 1)
                           : 0.0;
      const double below = lo_begin + f * (lo_end - lo_begin);
      const double above = hi_begin + f * (hi_end - hi_begin);
      worst = std::max(worst, determinant_identity_check(family, m, below).rel_err);
      worst = std::max(worst, determinant_identity_check(family, m, above).rel_err);
    }
  }
  return worst;
}

Stability classify_stability(const PtcSurface& surface, const SolverConfig& cfg) {
  const double gradient_norm = surface_gradient_max_norm(surface, cfg.fd_step);
  if (gradient_norm > kStationarityTol)
    throw StationarityError(
        "classify_stability: gradient max-norm " + std::to_string(gradient_norm) +
        " exceeds " + std::to_string(kStationarityTol) + "; not a critical point");
  return assemble_hessian(surface).positive_definite()
             ? Stability::Stable
             : Stability::NotPositiveDefinite;
}

}  // namespace ptc
