#pragma once

#include <cmath>
#include <utility>

namespace ptc::detail {

/// Bisect the boundary of a predicate that is true on [lo, crossing) and
/// false on (crossing, hi]. Stops when the bracket is narrower than tol (an
/// absolute width; pass 0 to run to floating-point resolution) or when the
/// midpoint stops being strictly interior.
template <class Pred>
double bisect_boundary(Pred&& inside, double lo, double hi, double tol,
                       int max_iter = 400) {
  for (int i = 0; i < max_iter && (hi - lo) > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (inside(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// True when v lies above the target. Non-finite values are treated as above:
/// the profiles blow up toward their pole and may overflow to +inf there.
inline bool above_target(double v, double target) {
  return !std::isfinite(v) || v > target;
}

}  // namespace ptc::detail
