#include <cmath>
#include <random>

#include <doctest.h>

#include "ptc/chebyshev.hpp"
#include "ptc/errors.hpp"

using namespace ptc;

TEST_CASE("first kind base cases") {
  CHECK(chebyshev_T(0, 7.3) == 1.0);
  CHECK(chebyshev_T(1, 2.5) == 2.5);
  // T_3(x) = 4x^3 - 3x expanded by hand: 32 - 6
  CHECK(chebyshev_T(3, 2.0) == doctest::Approx(26.0).epsilon(1e-14));
}

TEST_CASE("first kind matches cos(n acos x) on [-1, 1]") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> xs(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = xs(rng);
    const int n = trial % 20;
    CHECK(chebyshev_T(n, x) ==
          doctest::Approx(std::cos(n * std::acos(x))).epsilon(1e-10));
  }
}

TEST_CASE("third kind base cases") {
  CHECK(chebyshev_V(0, 3.1) == 1.0);
  CHECK(chebyshev_V(1, 2.0) == 3.0);
  // V_2(x) = 4x^2 - 2x - 1 expanded by hand: 16 - 4 - 1
  CHECK(chebyshev_V(2, 2.0) == doctest::Approx(11.0).epsilon(1e-14));
}

TEST_CASE("third kind is identically 1 at x = 1") {
  for (int n = 0; n <= 50; ++n) CHECK(chebyshev_V(n, 1.0) == 1.0);
}

TEST_CASE("V_{n-1}^2 - V_n V_{n-2} = 2 - 2x") {
  // The identity value is O(1) while the operands reach ~1e39, so the check
  // is scaled by the operand magnitude (the difference is cancellation-bound).
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> xs(1.0, 5.0);
  std::uniform_int_distribution<int> ns(2, 40);
  for (int trial = 0; trial < 500; ++trial) {
    const double x = xs(rng);
    const int n = ns(rng);
    const double vm1 = chebyshev_V(n - 1, x);
    const double lhs = vm1 * vm1 - chebyshev_V(n, x) * chebyshev_V(n - 2, x);
    const double scale = std::max(1.0, vm1 * vm1);
    CHECK(std::abs(lhs - (2.0 - 2.0 * x)) <= 1e-12 * scale);
  }
}

TEST_CASE("negative degree rejected") {
  CHECK_THROWS_AS(chebyshev_T(-1, 0.5), DomainError);
  CHECK_THROWS_AS(chebyshev_V(-3, 0.5), DomainError);
}
