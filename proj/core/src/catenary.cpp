#include "ptc/catenary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ptc/detail/bisect.hpp"
#include "ptc/errors.hpp"

namespace ptc {

namespace {

constexpr double kDegenerateBand = 1e-10;

double boundary_value(double c) { return c * std::cosh(1.0 / c); }
double boundary_slope(double c) { return std::cosh(1.0 / c) - std::sinh(1.0 / c) / c; }

}  // namespace

const CatenaryConstants& catenary_constants() {
  static const CatenaryConstants constants = [] {
    // The slope is negative at 0.5 and positive at 2; bisect to resolution.
    const double xi = detail::bisect_boundary(
        [](double c) { return boundary_slope(c) < 0.0; }, 0.5, 2.0, 0.0);
    return CatenaryConstants{xi, boundary_value(xi)};
  }();
  return constants;
}

double catenary_eval(double c, double t) { return c * std::cosh(t / c); }
double catenary_eval(const CatenaryParams& params, double t) {
  return catenary_eval(params.c, t);
}

std::pair<CatenaryParams, CatenaryParams> solve_catenary_boundary(double a) {
  if (!(a > 0.0)) throw DomainError("solve_catenary_boundary: a must be positive");
  const auto& [xi, eta] = catenary_constants();

  const double band = kDegenerateBand * std::max(1.0, a);
  if (std::abs(a - eta) <= band) throw DegenerateDoubleError(a, xi, eta);
  if (a < eta) throw NoSolutionError(a, eta);

  const auto above = [&](double c) {
    return detail::above_target(boundary_value(c), a);
  };

  double lo = 0.5 * xi;
  for (int i = 0; i < 200 && !above(lo); ++i) lo *= 0.5;
  if (!above(lo)) throw BracketError("solve_catenary_boundary: no lower bracket");
  const double c_minus = detail::bisect_boundary(above, lo, xi, 0.0);

  double hi = 2.0 * xi;
  for (int i = 0; i < 200 && !above(hi); ++i) hi *= 2.0;
  if (!above(hi)) throw BracketError("solve_catenary_boundary: no upper bracket");
  const double c_plus = detail::bisect_boundary(
      [&](double c) { return !above(c); }, xi, hi, 0.0);

  return {CatenaryParams{c_minus, a, Branch::Minus},
          CatenaryParams{c_plus, a, Branch::Plus}};
}

CatenaryFit build_polyline(Parity parity, int m, double a, Branch branch,
                           const SolverConfig& cfg) {
  if (m < 1) throw DomainError("build_polyline: m must be >= 1");
  const double ell = parity == Parity::Odd ? 2.0 / (2 * m + 1) : 1.0 / m;
  const ProfileFamily family{parity, ell};

  const auto pair = solve_branches(family, m, a, cfg);
  const double y = branch == Branch::Plus ? pair.y_plus : pair.y_minus;
  const auto values = profile_values(family, m, y);

  const auto [c_minus, c_plus] = solve_catenary_boundary(a);
  const CatenaryParams reference = branch == Branch::Plus ? c_plus : c_minus;

  const auto abscissa = [&](int k) {
    return parity == Parity::Odd ? static_cast<double>(2 * k + 1) / (2 * m + 1)
                                 : static_cast<double>(k) / m;
  };

  std::vector<PolylineVertex> vertices;
  vertices.push_back({-1.0, a});
  for (int k = m - 1; k >= 0; --k) vertices.push_back({-abscissa(k), values[static_cast<std::size_t>(k)]});
  const int rise_from = parity == Parity::Odd ? 0 : 1;
  for (int k = rise_from; k < m; ++k) vertices.push_back({abscissa(k), values[static_cast<std::size_t>(k)]});
  vertices.push_back({1.0, a});

  std::vector<double> errors;
  errors.reserve(vertices.size());
  double max_abs = 0.0;
  for (const auto& v : vertices) {
    const double err = v.r - catenary_eval(reference, v.t);
    errors.push_back(err);
    max_abs = std::max(max_abs, std::abs(err));
  }

  return CatenaryFit{family, m,        a,
                     branch, vertices, reference,
                     errors, max_abs};
}

double sup_norm_error(const CatenaryFit& fit) {
  const double c = fit.reference.c;
  double sup = 0.0;
  for (std::size_t i = 0; i + 1 < fit.vertices.size(); ++i) {
    const auto& [t0, r0] = fit.vertices[i];
    const auto& [t1, r1] = fit.vertices[i + 1];
    const double slope = (r1 - r0) / (t1 - t0);
    const auto gap = [&](double t) {
      return std::abs(r0 + slope * (t - t0) - catenary_eval(c, t));
    };
    sup = std::max({sup, gap(t0), gap(t1)});
    const double t_flat = c * std::asinh(slope);
    if (t_flat > t0 && t_flat < t1) sup = std::max(sup, gap(t_flat));
  }
  return sup;
}

bool verify_threshold_inequality(int m, std::span<const double> grid) {
  if (m < 1) throw DomainError("verify_threshold_inequality: m must be >= 1");
  const double lower = 1.0 / std::sqrt(2.0);
  const ProfileFamily family{Parity::Odd, 2.0 / (2 * m + 1)};
  for (const double y : grid) {
    if (y < lower)
      throw DomainError("verify_threshold_inequality: grid points must be >= 1/sqrt(2)");
    if (!(y * std::cosh(1.0 / y) - profile_value(family, m, y) > 0.0)) return false;
  }
  const auto [mu, nu] = find_minimum(family, m);
  (void)mu;
  return catenary_constants().eta_inf > nu;
}

std::vector<double> profile_limit_errors(Parity parity, Rational t, double x,
                                         std::span<const int> ms) {
  if (t.den <= 0) throw DomainError("profile_limit_errors: denominator must be positive");
  if (t.num < 0) throw DomainError("profile_limit_errors: t must be nonnegative");
  if (!(x > 0.0)) throw DomainError("profile_limit_errors: x must be positive");

  const double t_value = static_cast<double>(t.num) / static_cast<double>(t.den);
  const double target = x * std::cosh(t_value / x);

  std::vector<double> errors;
  errors.reserve(ms.size());
  for (const int m : ms) {
    if (m < 1) throw DomainError("profile_limit_errors: m must be >= 1");
    if ((t.num * m) % t.den != 0)
      throw DomainError("profile_limit_errors: t*m is not an integer for m = " +
                        std::to_string(m));
    const int n = static_cast<int>(t.num * m / t.den);
    const double ell = parity == Parity::Odd ? 2.0 / (2 * m + 1) : 1.0 / m;
    const ProfileFamily family{parity, ell};
    errors.push_back(std::abs(profile_value(family, n, x) - target));
  }
  return errors;
}

}  // namespace ptc
