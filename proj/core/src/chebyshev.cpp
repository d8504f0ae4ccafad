#include "ptc/chebyshev.hpp"

#include "ptc/errors.hpp"

namespace ptc {

namespace {

double recurrence(int n, double x, double first, double second) {
  if (n == 0) return first;
  double prev = first;
  double cur = second;
  for (int k = 2; k <= n; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

double chebyshev_T(int n, double x) {
  if (n < 0) throw DomainError("chebyshev_T: degree must be nonnegative");
  return recurrence(n, x, 1.0, x);
}

double chebyshev_V(int n, double x) {
  if (n < 0) throw DomainError("chebyshev_V: degree must be nonnegative");
  return recurrence(n, x, 1.0, 2.0 * x - 1.0);
}

}  // namespace ptc
