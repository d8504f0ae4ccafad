#include "ptc/hypergeometric.hpp"

#include "ptc/errors.hpp"

namespace ptc {

double hypergeometric_terminating(double p, int n, double c, double z) {
  if (n < 0) throw DomainError("hypergeometric_terminating: n must be nonnegative");
  double term = 1.0;
  double sum = 1.0;
  for (int i = 0; i < n; ++i) {
    const double denom = (c + i) * (i + 1.0);
    if (denom == 0.0)
      throw DomainError("hypergeometric_terminating: zero Pochhammer factor in denominator");
    term *= (p + i) * (i - n) / denom * z;
    sum += term;
  }
  return sum;
}

}  // namespace ptc
