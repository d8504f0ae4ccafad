#pragma once

#include <stdexcept>
#include <string>

namespace ptc {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A root bracket could not be established within the configured number of
/// expansion steps. Signals misconfiguration, not a mathematical failure.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The boundary equation has no solution: the requested boundary radius lies
/// below the profile minimum.
class NoSolutionError : public std::runtime_error {
 public:
  NoSolutionError(double a, double nu)
      : std::runtime_error("no solution: a = " + std::to_string(a) +
                           " <= nu = " + std::to_string(nu)),
        a(a),
        nu(nu) {}
  double a;
  double nu;
};

/// The boundary radius coincides with the profile minimum within the solver
/// band; the two branches collapse to the double root at mu.
class DegenerateDoubleError : public std::runtime_error {
 public:
  DegenerateDoubleError(double a, double mu, double nu)
      : std::runtime_error("degenerate double root: a = " + std::to_string(a) +
                           " coincides with nu = " + std::to_string(nu)),
        a(a),
        mu(mu),
        nu(nu) {}
  double a;
  double mu;
  double nu;
};

/// Stability classification requested at a point that is not critical.
class StationarityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ptc
