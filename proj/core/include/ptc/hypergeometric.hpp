#pragma once

namespace ptc {

/// Terminating Gauss series F(p, -n; c; z) = sum_{i=0}^{n} (p)_i (-n)_i /
/// ((c)_i (1)_i) z^i. Terms are accumulated by successive term ratios, never
/// by factorial quotients.
///
/// Throws DomainError when a denominator Pochhammer factor (c)_i vanishes
/// within the first n terms.
double hypergeometric_terminating(double p, int n, double c, double z);

}  // namespace ptc
