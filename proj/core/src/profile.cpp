#include "ptc/profile.hpp"

#include <cmath>
#include <string>

#include "ptc/chebyshev.hpp"
#include "ptc/errors.hpp"
#include "ptc/hypergeometric.hpp"

namespace ptc {

namespace {

// Fraction of ell kept clear of the odd pole at y = ell/2.
constexpr double kPoleGuard = 1e-9;

// Above this degree the radical route switches to log-magnitude arithmetic;
// (2y+ell)^{2n+1} overflows long before the profile value itself does.
constexpr int kLogSpaceDegree = 500;

double odd_value(double ell, int n, double y, EvalRoute route) {
  const double denom = 4.0 * y * y - ell * ell;
  switch (route) {
    case EvalRoute::ChebyshevRecurrence:
      return y * chebyshev_V(n, 1.0 + 2.0 * ell * ell / denom);
    case EvalRoute::HypergeometricSeries:
      return y * hypergeometric_terminating(n + 1.0, n, 0.5, -ell * ell / denom);
    case EvalRoute::ClosedRadical: {
      const double p = 2.0 * y + ell;
      const double q = 2.0 * y - ell;
      if (n <= kLogSpaceDegree) {
        const double r = p / q;
        return 0.25 * (p * std::pow(r, n) + q * std::pow(1.0 / r, n));
      }
      const double d = n * (std::log(p) - std::log(q));
      const double big = std::log(p) + d;
      const double small = std::log(q) - d;
      return 0.25 * std::exp(big + std::log1p(std::exp(small - big)));
    }
  }
  throw DomainError("profile_value: unknown evaluation route");
}

double even_value(double ell, int n, double x, EvalRoute route) {
  switch (route) {
    case EvalRoute::ChebyshevRecurrence:
      return x * chebyshev_T(n, 1.0 + ell * ell / (2.0 * x * x));
    case EvalRoute::HypergeometricSeries:
      return x * hypergeometric_terminating(n, n, 0.5, -ell * ell / (4.0 * x * x));
    case EvalRoute::ClosedRadical: {
      const double w = ell / (2.0 * x);
      const double s = w + std::sqrt(1.0 + w * w);
      if (n <= kLogSpaceDegree)
        return 0.5 * x * (std::pow(s, 2 * n) + std::pow(s, -2 * n));
      const double big = 2.0 * n * std::log(s);
      return 0.5 * x * std::exp(big + std::log1p(std::exp(-2.0 * big)));
    }
  }
  throw DomainError("profile_value: unknown evaluation route");
}

// Termwise derivatives of the terminating series form. Coefficients are
// accumulated by Pochhammer term ratios.
double odd_derivative(double ell, int n, double y, int order) {
  const double l2 = ell * ell;
  const double y2 = y * y;
  const double denom = 4.0 * y2 - l2;
  double coeff = 1.0;    // (n+1)_i / (1/2)_i binom(n,i) ell^{2i}
  double power = denom;  // denom^{i+1}
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    if (order == 1) {
      sum += coeff * ((4.0 - 8.0 * i) * y2 - l2) / power;
    } else {
      sum += coeff * 8.0 * i * y * ((8.0 * i - 4.0) * y2 + 3.0 * l2) / (power * denom);
    }
    coeff *= (n + 1.0 + i) * (n - i) / ((0.5 + i) * (i + 1.0)) * l2;
    power *= denom;
  }
  return sum;
}

double even_derivative(double ell, int n, double x, int order) {
  const double half_l2 = 0.25 * ell * ell;  // (ell/2)^2
  double coeff = 1.0;                       // (n)_i / (1/2)_i binom(n,i) (ell/2)^{2i}
  double xpow = 1.0;                        // x^{-2i}
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    if (order == 1) {
      sum += coeff * (1.0 - 2.0 * i) * xpow;
    } else {
      sum += coeff * (2.0 * i) * (2.0 * i - 1.0) * xpow / x;
    }
    coeff *= (n + 0.0 + i) * (n - i) / ((0.5 + i) * (i + 1.0)) * half_l2;
    xpow /= x * x;
  }
  return sum;
}

}  // namespace

double ProfileFamily::domain_floor() const {
  // Twice the guard so the floor stays legal after rounding in r - ell/2.
  return parity == Parity::Odd ? ell * (0.5 + 2.0 * kPoleGuard) : 0.0;
}

void ProfileFamily::require_valid() const {
  if (!(ell > 0.0) || !std::isfinite(ell))
    throw DomainError("ProfileFamily: ell must be positive and finite");
}

void ProfileFamily::require_in_domain(double r) const {
  require_valid();
  if (!std::isfinite(r)) throw DomainError("profile argument must be finite");
  if (parity == Parity::Odd) {
    if (!(r > 0.5 * ell))
      throw DomainError("odd profile argument must exceed ell/2, got " + std::to_string(r));
    if (r - 0.5 * ell < kPoleGuard * ell)
      throw DomainError("odd profile argument within the guard band of the pole at ell/2");
  } else if (!(r > 0.0)) {
    throw DomainError("even profile argument must be positive, got " + std::to_string(r));
  }
}

double profile_value(const ProfileFamily& family, int n, double r, EvalRoute route) {
  family.require_in_domain(r);
  if (n < 0) throw DomainError("profile index must be nonnegative");
  return family.parity == Parity::Odd ? odd_value(family.ell, n, r, route)
                                      : even_value(family.ell, n, r, route);
}

double profile_derivative(const ProfileFamily& family, int n, double r, int order) {
  family.require_in_domain(r);
  if (n < 0) throw DomainError("profile index must be nonnegative");
  if (order != 1 && order != 2)
    throw DomainError("profile derivative order must be 1 or 2");
  return family.parity == Parity::Odd ? odd_derivative(family.ell, n, r, order)
                                      : even_derivative(family.ell, n, r, order);
}

std::vector<double> profile_values(const ProfileFamily& family, int count, double r) {
  family.require_in_domain(r);
  if (count < 0) throw DomainError("profile count must be nonnegative");
  std::vector<double> values(static_cast<std::size_t>(count));
  if (count == 0) return values;

  const double ell = family.ell;
  double u, prev, cur;
  if (family.parity == Parity::Odd) {
    u = 1.0 + 2.0 * ell * ell / (4.0 * r * r - ell * ell);
    prev = 1.0;
    cur = 2.0 * u - 1.0;
  } else {
    u = 1.0 + ell * ell / (2.0 * r * r);
    prev = 1.0;
    cur = u;
  }
  values[0] = r;
  for (int k = 1; k < count; ++k) {
    values[static_cast<std::size_t>(k)] = r * cur;
    const double next = 2.0 * u * cur - prev;
    prev = cur;
    cur = next;
  }
  return values;
}

}  // namespace ptc
