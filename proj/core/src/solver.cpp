#include "ptc/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ptc/detail/bisect.hpp"
#include "ptc/errors.hpp"
#include "ptc/finite_diff.hpp"

namespace ptc {

namespace {

constexpr double kDegenerateBand = 1e-10;

// Shrink lo toward the pole until pred holds, clamped to the domain floor.
double shrink_until(const ProfileFamily& fam, double start, int max_steps,
                    auto&& pred) {
  const double pole = fam.pole();
  const double floor = fam.domain_floor();
  double lo = start;
  for (int i = 0; i < max_steps; ++i) {
    lo = std::max(pole + 0.5 * (lo - pole), floor);
    if (pred(lo)) return lo;
    if (lo == floor) break;  // cannot shrink further
  }
  throw BracketError("no bracket below the profile minimum within max_expand steps");
}

// Grow hi away from the pole until pred holds.
double grow_until(const ProfileFamily& fam, double start, int max_steps,
                  auto&& pred) {
  const double pole = fam.pole();
  double hi = start;
  for (int i = 0; i < max_steps; ++i) {
    hi = pole + 2.0 * (hi - pole);
    if (pred(hi)) return hi;
  }
  throw BracketError("no bracket above the profile minimum within max_expand steps");
}

}  // namespace

double cone_area_element(double s, double t, double ell) {
  if (!(s > 0.0) || !(t > 0.0) || !(ell > 0.0))
    throw DomainError("cone_area_element: radii and height must be positive");
  const double d = t - s;
  return (s + t) * std::sqrt(d * d + ell * ell);
}

double area_objective(const ProfileFamily& family, double a,
                      std::span<const double> radii) {
  family.require_valid();
  if (!(a > 0.0)) throw DomainError("area_objective: boundary radius must be positive");
  if (radii.empty()) throw DomainError("area_objective: need at least one interior radius");
  for (const double r : radii)
    if (!(r > 0.0)) throw DomainError("area_objective: radii must be positive");

  // Odd surfaces carry the central cylinder band of height ell at radii[0].
  double sum = family.parity == Parity::Odd ? radii[0] * family.ell : 0.0;
  for (std::size_t i = 1; i < radii.size(); ++i)
    sum += cone_area_element(radii[i - 1], radii[i], family.ell);
  sum += cone_area_element(radii.back(), a, family.ell);
  return sum;
}

std::pair<double, double> find_minimum(const ProfileFamily& family, int m,
                                       const SolverConfig& cfg) {
  family.require_valid();
  if (m < 1) throw DomainError("find_minimum: profile index must be >= 1");
  if (!(cfg.root_tol > 0.0)) throw DomainError("find_minimum: root_tol must be positive");

  const auto deriv = [&](double r) { return profile_derivative(family, m, r, 1); };
  const double pole = family.pole();
  const double seed = pole + std::max(family.ell, 0.5);

  // The derivative is strictly increasing: negative toward the pole, positive
  // toward infinity. Bracket the single sign change, then bisect.
  double lo = seed;
  if (deriv(lo) >= 0.0)
    lo = shrink_until(family, lo, cfg.max_expand, [&](double r) { return deriv(r) < 0.0; });
  double hi = seed;
  if (deriv(hi) <= 0.0)
    hi = grow_until(family, hi, cfg.max_expand, [&](double r) { return deriv(r) > 0.0; });

  const double mu = detail::bisect_boundary(
      [&](double r) { return deriv(r) < 0.0; }, lo, hi, cfg.root_tol);
  return {mu, profile_value(family, m, mu)};
}

BranchPair solve_branches(const ProfileFamily& family, int m, double a,
                          const SolverConfig& cfg) {
  if (!(a > 0.0)) throw DomainError("solve_branches: boundary radius must be positive");
  const auto [mu, nu] = find_minimum(family, m, cfg);

  const double band = kDegenerateBand * std::max(1.0, a);
  if (std::abs(a - nu) <= band) throw DegenerateDoubleError(a, mu, nu);
  if (a < nu) throw NoSolutionError(a, nu);

  const auto value_above = [&](double r) {
    return detail::above_target(profile_value(family, m, r), a);
  };

  // Minus branch: the profile decreases from +inf down to nu on (pole, mu).
  const double lo = shrink_until(family, mu, cfg.max_expand, value_above);
  const double y_minus =
      detail::bisect_boundary(value_above, lo, mu, cfg.root_tol);

  // Plus branch: the profile increases through a beyond mu.
  const double hi = grow_until(family, mu, cfg.max_expand, value_above);
  const double y_plus = detail::bisect_boundary(
      [&](double r) { return !value_above(r); }, mu, hi, cfg.root_tol);

  return BranchPair{family, m, a, mu, nu, y_minus, y_plus};
}

std::vector<double> PtcSurface::interior_radii() const {
  // radii = (a, v_{m-1}, ..., v_0, [v_0,] ..., v_{m-1}, a); the center sits at
  // index m for both parities.
  std::vector<double> interior(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k)
    interior[static_cast<std::size_t>(k)] = radii[static_cast<std::size_t>(m - k)];
  return interior;
}

PtcSurface build_surface(const BranchPair& pair, Branch branch) {
  const double y = branch == Branch::Plus ? pair.y_plus : pair.y_minus;
  const auto values = profile_values(pair.family, pair.m, y);

  std::vector<double> radii;
  radii.reserve(static_cast<std::size_t>(2 * pair.m + 2));
  radii.push_back(pair.a);
  for (int k = pair.m - 1; k >= 0; --k) radii.push_back(values[static_cast<std::size_t>(k)]);
  const int rise_from = pair.family.parity == Parity::Odd ? 0 : 1;
  for (int k = rise_from; k < pair.m; ++k) radii.push_back(values[static_cast<std::size_t>(k)]);
  radii.push_back(pair.a);

  double area = 0.0;
  for (std::size_t i = 1; i < radii.size(); ++i)
    area += cone_area_element(radii[i - 1], radii[i], pair.family.ell);

  return PtcSurface{pair.family, pair.m, pair.a, branch, std::move(radii), area};
}

PtcSurface build_surface(const ProfileFamily& family, int m, double a,
                         Branch branch, const SolverConfig& cfg) {
  return build_surface(solve_branches(family, m, a, cfg), branch);
}

double surface_gradient_max_norm(const PtcSurface& surface, double step) {
  const auto objective = [&](const std::vector<double>& ys) {
    return area_objective(surface.family, surface.a, ys);
  };
  const auto grad = fd_gradient(objective, surface.interior_radii(), step);
  double norm = 0.0;
  for (const double g : grad) norm = std::max(norm, std::abs(g));
  return norm;
}

}  // namespace ptc
