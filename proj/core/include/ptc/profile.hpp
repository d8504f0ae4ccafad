#pragma once

#include <vector>

namespace ptc {

enum class Parity { Even, Odd };

/// The three algebraically equal evaluation routes for the profile families.
/// They agree to ~1e-12 relative on the legal domain (tested); the Chebyshev
/// recurrence is the default: O(n), argument >= 1 on the legal domain.
enum class EvalRoute { HypergeometricSeries, ChebyshevRecurrence, ClosedRadical };

/// A profile family of a given parity and cone height ell.
///
/// Even: x -> x T_n(1 + ell^2/(2x^2)) on x > 0, the generating function of the
/// interior radii of a 2m-cone symmetric surface.
/// Odd:  y -> y V_n(1 + 2 ell^2/(4y^2 - ell^2)) on y > ell/2, likewise for a
/// (2m+1)-cone surface.
struct ProfileFamily {
  Parity parity = Parity::Odd;
  double ell = 1.0;

  /// Left end of the open domain: ell/2 (odd) or 0 (even).
  double pole() const { return parity == Parity::Odd ? 0.5 * ell : 0.0; }

  /// Smallest argument accepted by evaluations. The odd profile diverges at
  /// y = ell/2; arguments with y - ell/2 < 1e-9 ell are rejected.
  double domain_floor() const;

  void require_valid() const;            // ell > 0 and finite
  void require_in_domain(double r) const;  // throws DomainError

  friend bool operator==(const ProfileFamily&, const ProfileFamily&) = default;
};

/// Value of the n-th profile of the family at r, by the requested route.
double profile_value(const ProfileFamily& family, int n, double r,
                     EvalRoute route = EvalRoute::ChebyshevRecurrence);

/// First or second derivative (order 1 or 2) of the n-th profile at r, via
/// the closed termwise series of the terminating hypergeometric form.
double profile_derivative(const ProfileFamily& family, int n, double r, int order);

/// Profiles 0..count-1 at r in one recurrence pass (default route).
std::vector<double> profile_values(const ProfileFamily& family, int count, double r);

}  // namespace ptc
