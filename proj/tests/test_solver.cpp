#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "ptc/errors.hpp"
#include "ptc/finite_diff.hpp"
#include "ptc/solver.hpp"
#include "support/oracles.hpp"

using namespace ptc;
namespace golden = oracles::golden;

TEST_CASE("cone area element") {
  CHECK(cone_area_element(1.0, 1.0, 1.0) == 2.0);  // cylinder band
  // flat annulus limit: (s+t)|t-s| as ell -> 0
  CHECK(cone_area_element(1.0, 2.0, 1e-4) == doctest::Approx(3.0).epsilon(1e-7));
  CHECK(cone_area_element(0.5, 1.5, 2.0) ==
        doctest::Approx(2.0 * std::sqrt(5.0)).epsilon(1e-15));
  CHECK_THROWS_AS(cone_area_element(0.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(cone_area_element(1.0, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(cone_area_element(1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("area objective direct sums") {
  const ProfileFamily odd{Parity::Odd, 1.0};
  const std::vector<double> ys{1.0};
  CHECK(area_objective(odd, 1.0, ys) == doctest::Approx(3.0).epsilon(1e-15));

  const ProfileFamily even{Parity::Even, 1.0};
  CHECK(area_objective(even, 1.0, ys) == doctest::Approx(2.0).epsilon(1e-15));

  CHECK_THROWS_AS(area_objective(odd, -1.0, ys), DomainError);
  CHECK_THROWS_AS(area_objective(odd, 1.0, std::vector<double>{}), DomainError);
  CHECK_THROWS_AS(area_objective(odd, 1.0, std::vector<double>{-0.1}), DomainError);
}

TEST_CASE("gradient nearly vanishes at the published critical points") {
  // the printed radii are rounded to 4 d.p., so the gradient is only ~1e-3
  const ProfileFamily f23{Parity::Odd, 2.0 / 3.0};
  auto grad1 = fd_gradient(
      [&](const std::vector<double>& ys) { return area_objective(f23, 2.0, ys); },
      {1.7338}, 1e-6);
  CHECK(std::abs(grad1[0]) < 1e-3);

  const ProfileFamily f25{Parity::Odd, 2.0 / 5.0};
  auto grad2 = fd_gradient(
      [&](const std::vector<double>& ys) { return area_objective(f25, 2.0, ys); },
      {1.7101, 1.8050}, 1e-6);
  CHECK(std::max(std::abs(grad2[0]), std::abs(grad2[1])) < 1e-3);
}

TEST_CASE("find_minimum hits the frozen minima") {
  const auto [mu1, nu1] = find_minimum(ProfileFamily{Parity::Odd, 2.0 / 3.0}, 1);
  CHECK(mu1 == doctest::Approx(golden::kMu1).epsilon(1e-11));
  CHECK(nu1 == doctest::Approx(golden::kNu1).epsilon(1e-13));
  CHECK(nu1 < 2.0);

  const auto [mu2, nu2] = find_minimum(ProfileFamily{Parity::Odd, 2.0 / 5.0}, 2);
  CHECK(mu2 == doctest::Approx(golden::kMu2).epsilon(1e-11));
  CHECK(nu2 == doctest::Approx(golden::kNu2).epsilon(1e-13));

  const auto [mu3, nu3] = find_minimum(ProfileFamily{Parity::Odd, 2.0 / 7.0}, 3);
  CHECK(mu3 == doctest::Approx(golden::kMu3).epsilon(1e-11));
  CHECK(nu3 == doctest::Approx(golden::kNu3).epsilon(1e-13));

  const auto [xi2, eta2] = find_minimum(ProfileFamily{Parity::Even, 0.5}, 2);
  CHECK(xi2 == doctest::Approx(golden::kEvenXi2).epsilon(1e-11));
  CHECK(eta2 == doctest::Approx(golden::kEvenEta2).epsilon(1e-13));

  CHECK_THROWS_AS(find_minimum(ProfileFamily{Parity::Odd, 0.3}, 0), DomainError);
}

TEST_CASE("find_minimum agrees with golden-section search") {
  const ProfileFamily fam{Parity::Odd, 2.0 / 3.0};
  const auto [mu, nu] = find_minimum(fam, 1);
  const double oracle = oracles::golden_section_minimize(
      [&](double y) { return profile_value(fam, 1, y); }, 0.4, 3.0, 1e-12);
  // value comparisons go flat within ~sqrt(eps nu / h'') of the minimum, so
  // the argmin from a value-only search carries that much noise
  CHECK(std::abs(mu - oracle) < 5e-8);
  CHECK(nu == doctest::Approx(profile_value(fam, 1, oracle)).epsilon(1e-13));
}

TEST_CASE("minima are increasing in the profile index") {
  double prev_mu = 0.0, prev_nu = 0.0;
  for (int m = 1; m <= 10; ++m) {
    const auto [mu, nu] = find_minimum(ProfileFamily{Parity::Odd, 0.3}, m);
    CHECK(mu > prev_mu);
    CHECK(nu > prev_nu);
    prev_mu = mu;
    prev_nu = nu;
  }
}

TEST_CASE("solve_branches reproduces the frozen roots") {
  const auto pair1 = solve_branches(ProfileFamily{Parity::Odd, 2.0 / 3.0}, 1, 2.0);
  CHECK(pair1.y_plus == doctest::Approx(golden::kYPlus1).epsilon(1e-11));
  CHECK(pair1.y_minus == doctest::Approx(golden::kYMinus1).epsilon(1e-11));
  CHECK(pair1.y_minus < pair1.mu);
  CHECK(pair1.mu < pair1.y_plus);

  const auto pair3 = solve_branches(ProfileFamily{Parity::Odd, 2.0 / 7.0}, 3, 2.0);
  CHECK(pair3.y_plus == doctest::Approx(golden::kYPlus3).epsilon(1e-11));
  CHECK(pair3.y_minus == doctest::Approx(golden::kYMinus3).epsilon(1e-11));

  // residual of the boundary equation at both roots
  const ProfileFamily f27{Parity::Odd, 2.0 / 7.0};
  CHECK(std::abs(profile_value(f27, 3, pair3.y_plus) - 2.0) < 1e-10);
  CHECK(std::abs(profile_value(f27, 3, pair3.y_minus) - 2.0) < 1e-10);
}

TEST_CASE("even family closed-form roots at m = 1") {
  const auto pair = solve_branches(ProfileFamily{Parity::Even, 1.0}, 1, 2.0);
  CHECK(pair.y_plus == doctest::Approx(golden::kEvenXPlus1).epsilon(1e-12));
  CHECK(pair.y_minus == doctest::Approx(golden::kEvenXMinus1).epsilon(1e-12));
}

TEST_CASE("no solution below the minimum, degenerate at it") {
  const ProfileFamily fam{Parity::Odd, 2.0 / 5.0};
  const auto [mu, nu] = find_minimum(fam, 2);
  (void)mu;
  CHECK_THROWS_AS(solve_branches(fam, 2, nu - 0.01), NoSolutionError);
  CHECK_THROWS_AS(solve_branches(fam, 2, nu), DegenerateDoubleError);
  CHECK_THROWS_AS(solve_branches(fam, 2, nu + 1e-12), DegenerateDoubleError);
  CHECK_THROWS_AS(solve_branches(fam, 2, -1.0), DomainError);

  try {
    solve_branches(fam, 2, nu - 0.01);
  } catch (const NoSolutionError& e) {
    CHECK(e.a == doctest::Approx(nu - 0.01));
    CHECK(e.nu == doctest::Approx(nu));
  }
}

TEST_CASE("surface assembly: odd m = 3 plus branch") {
  const PtcSurface s = build_surface(ProfileFamily{Parity::Odd, 2.0 / 7.0}, 3,
                                     2.0, Branch::Plus);
  REQUIRE(s.radii.size() == 8);  // 2m+2 radii, 2m+1 cones
  CHECK(s.radii.front() == 2.0);
  CHECK(s.radii.back() == 2.0);

  const auto interior = s.interior_radii();
  REQUIRE(interior.size() == 3);
  CHECK(interior[0] == doctest::Approx(golden::kYPlus3).epsilon(1e-10));
  CHECK(interior[1] == doctest::Approx(golden::kH1Plus3).epsilon(1e-10));
  CHECK(interior[2] == doctest::Approx(golden::kH2Plus3).epsilon(1e-10));

  SUBCASE("radii are palindromic") {
    auto reversed = s.radii;
    std::reverse(reversed.begin(), reversed.end());
    CHECK(reversed == s.radii);
  }

  SUBCASE("area equals the sum over consecutive pairs and twice the objective") {
    double sum = 0.0;
    for (std::size_t i = 1; i < s.radii.size(); ++i)
      sum += cone_area_element(s.radii[i - 1], s.radii[i], s.family.ell);
    CHECK(s.area_over_pi == doctest::Approx(sum).epsilon(1e-15));
    CHECK(s.area_over_pi ==
          doctest::Approx(2.0 * area_objective(s.family, s.a, interior))
              .epsilon(1e-14));
  }

  SUBCASE("plus-branch interior is monotone and below the boundary") {
    for (std::size_t i = 1; i < interior.size(); ++i)
      CHECK(interior[i] > interior[i - 1]);
    CHECK(interior.back() < s.a);
  }

  SUBCASE("reversing the radii preserves the area") {
    auto reversed = s.radii;
    std::reverse(reversed.begin(), reversed.end());
    double sum = 0.0;
    for (std::size_t i = 1; i < reversed.size(); ++i)
      sum += cone_area_element(reversed[i - 1], reversed[i], s.family.ell);
    CHECK(sum == doctest::Approx(s.area_over_pi).epsilon(1e-15));
  }
}

TEST_CASE("surface assembly: odd m = 2 minus branch") {
  const PtcSurface s = build_surface(ProfileFamily{Parity::Odd, 2.0 / 5.0}, 2,
                                     2.0, Branch::Minus);
  const auto interior = s.interior_radii();
  REQUIRE(interior.size() == 2);
  CHECK(interior[0] == doctest::Approx(golden::kYMinus2).epsilon(1e-10));
  CHECK(interior[1] == doctest::Approx(golden::kH1Minus2).epsilon(1e-10));
}

TEST_CASE("surface assembly: even m = 1 and m = 2") {
  const PtcSurface s1 = build_surface(ProfileFamily{Parity::Even, 1.0}, 1, 2.0,
                                      Branch::Plus);
  REQUIRE(s1.radii.size() == 3);  // 2m+1 radii, 2m cones
  CHECK(s1.radii[0] == 2.0);
  CHECK(s1.radii[1] == doctest::Approx(golden::kEvenXPlus1).epsilon(1e-11));
  CHECK(s1.radii[2] == 2.0);

  const PtcSurface s2 = build_surface(ProfileFamily{Parity::Even, 0.5}, 2, 2.0,
                                      Branch::Plus);
  REQUIRE(s2.radii.size() == 5);
  const auto interior = s2.interior_radii();
  CHECK(interior[0] == doctest::Approx(golden::kEvenXPlus2).epsilon(1e-10));
  CHECK(interior[1] == doctest::Approx(golden::kEvenG1Plus2).epsilon(1e-10));
}

TEST_CASE("built surfaces are critical points of the objective") {
  for (const Parity parity : {Parity::Odd, Parity::Even}) {
    for (int m = 1; m <= 4; ++m) {
      const double ell = parity == Parity::Odd ? 2.0 / (2 * m + 1) : 1.0 / m;
      for (const Branch branch : {Branch::Plus, Branch::Minus}) {
        const PtcSurface s =
            build_surface(ProfileFamily{parity, ell}, m, 2.0, branch);
        CHECK(surface_gradient_max_norm(s) < 1e-8);
      }
    }
  }
}

TEST_CASE("coordinate descent recovers the plus branch") {
  for (int m : {1, 2}) {
    const double ell = 2.0 / (2 * m + 1);
    const ProfileFamily fam{Parity::Odd, ell};
    const PtcSurface s = build_surface(fam, m, 2.0, Branch::Plus);
    const auto oracle = oracles::coordinate_descent_minimize(
        [&](const std::vector<double>& ys) { return area_objective(fam, 2.0, ys); },
        std::vector<double>(static_cast<std::size_t>(m), 2.0), 1e-3, 4.0, 1e-12);
    const auto interior = s.interior_radii();
    for (int i = 0; i < m; ++i)
      CHECK(std::abs(oracle[static_cast<std::size_t>(i)] -
                     interior[static_cast<std::size_t>(i)]) < 1e-6);
  }
}
