#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace ptc {

/// Central-difference gradient of f at x. The step is relative:
/// h_i = step * max(1, |x_i|).
template <class F>
std::vector<double> fd_gradient(F&& f, std::vector<double> x, double step) {
  std::vector<double> grad(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    const double h = step * std::max(1.0, std::abs(xi));
    x[i] = xi + h;
    const double fp = f(x);
    x[i] = xi - h;
    const double fm = f(x);
    x[i] = xi;
    grad[i] = (fp - fm) / (2.0 * h);
  }
  return grad;
}

/// Central-difference Hessian of f at x (dense, symmetric by construction).
template <class F>
std::vector<std::vector<double>> fd_hessian(F&& f, std::vector<double> x,
                                            double step) {
  const std::size_t n = x.size();
  std::vector<std::vector<double>> hess(n, std::vector<double>(n, 0.0));
  const double f0 = f(x);
  std::vector<double> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = step * std::max(1.0, std::abs(x[i]));

  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    x[i] = xi + h[i];
    const double fp = f(x);
    x[i] = xi - h[i];
    const double fm = f(x);
    x[i] = xi;
    hess[i][i] = (fp - 2.0 * f0 + fm) / (h[i] * h[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double xj = x[j];
      x[i] = xi + h[i];
      x[j] = xj + h[j];
      const double fpp = f(x);
      x[j] = xj - h[j];
      const double fpm = f(x);
      x[i] = xi - h[i];
      const double fmm = f(x);
      x[j] = xj + h[j];
      const double fmp = f(x);
      x[i] = xi;
      x[j] = xj;
      hess[i][j] = hess[j][i] = (fpp - fpm - fmp + fmm) / (4.0 * h[i] * h[j]);
    }
  }
  return hess;
}

}  // namespace ptc
