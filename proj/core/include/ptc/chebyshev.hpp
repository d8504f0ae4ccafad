#pragma once

namespace ptc {

/// T_n(x), first kind: T_0 = 1, T_1 = x, T_n = 2x T_{n-1} - T_{n-2}.
double chebyshev_T(int n, double x);

/// V_n(x), third kind: V_0 = 1, V_1 = 2x - 1, V_n = 2x V_{n-1} - V_{n-2}.
double chebyshev_V(int n, double x);

}  // namespace ptc
