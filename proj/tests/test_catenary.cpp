#include <cmath>
#include <vector>

#include <doctest.h>

#include "ptc/catenary.hpp"
#include "ptc/errors.hpp"
#include "support/oracles.hpp"

using namespace ptc;
namespace golden = oracles::golden;

TEST_CASE("recomputed constants") {
  const auto& [xi, eta] = catenary_constants();
  CHECK(xi == doctest::Approx(golden::kXiInf).epsilon(1e-13));
  CHECK(eta == doctest::Approx(golden::kEtaInf).epsilon(1e-14));
  // the published decimals truncate: 1.5088..., 0.8335...
  CHECK(oracles::trunc4(eta) == 1.5088);
  CHECK(oracles::trunc4(xi) == 0.8335);
}

TEST_CASE("boundary roots at a = 2") {
  const auto [minus, plus] = solve_catenary_boundary(2.0);
  CHECK(minus.c == doctest::Approx(golden::kC2Minus).epsilon(1e-13));
  CHECK(plus.c == doctest::Approx(golden::kC2Plus).epsilon(1e-13));
  CHECK(minus.branch == Branch::Minus);
  CHECK(plus.branch == Branch::Plus);
  CHECK(minus.c < catenary_constants().xi_inf);
  CHECK(plus.c > catenary_constants().xi_inf);
  // the defining equation holds to full precision
  CHECK(std::abs(minus.c * std::cosh(1.0 / minus.c) - 2.0) < 1e-12);
  CHECK(std::abs(plus.c * std::cosh(1.0 / plus.c) - 2.0) < 1e-12);
}

TEST_CASE("no boundary catenary below the threshold") {
  const double eta = catenary_constants().eta_inf;
  CHECK_THROWS_AS(solve_catenary_boundary(eta - 0.01), NoSolutionError);
  CHECK_THROWS_AS(solve_catenary_boundary(eta), DegenerateDoubleError);
  CHECK_THROWS_AS(solve_catenary_boundary(-1.0), DomainError);
}

TEST_CASE("catenary evaluation") {
  CHECK(catenary_eval(1.6966, 0.0) == 1.6966);
  CHECK(catenary_eval(golden::kC2Plus, 1.0 / 3.0) ==
        doctest::Approx(golden::kCPlusT13).epsilon(1e-14));
  CHECK(catenary_eval(golden::kC2Minus, 5.0 / 7.0) ==
        doctest::Approx(golden::kCMinusT57).epsilon(1e-14));
}

TEST_CASE("polyline vertices and errors, odd m = 3 plus") {
  const CatenaryFit fit = build_polyline(Parity::Odd, 3, 2.0, Branch::Plus);
  REQUIRE(fit.vertices.size() == 8);
  REQUIRE(fit.per_vertex_error.size() == 8);
  CHECK(fit.vertices.front().t == -1.0);
  CHECK(fit.vertices.front().r == 2.0);
  CHECK(fit.vertices.back().t == 1.0);
  CHECK(fit.vertices.back().r == 2.0);

  // abscissae are the prescribed rationals +-(2k-1)/(2m+1)
  CHECK(fit.vertices[1].t == doctest::Approx(-5.0 / 7.0).epsilon(1e-15));
  CHECK(fit.vertices[3].t == doctest::Approx(-1.0 / 7.0).epsilon(1e-15));
  CHECK(fit.vertices[4].t == doctest::Approx(1.0 / 7.0).epsilon(1e-15));

  CHECK(fit.vertices[4].r == doctest::Approx(golden::kYPlus3).epsilon(1e-10));
  CHECK(fit.vertices[5].r == doctest::Approx(golden::kH1Plus3).epsilon(1e-10));
  CHECK(fit.vertices[6].r == doctest::Approx(golden::kH2Plus3).epsilon(1e-10));

  CHECK(fit.reference.c == doctest::Approx(golden::kC2Plus).epsilon(1e-13));
  CHECK(fit.max_abs_error ==
        doctest::Approx(golden::kMaxErrPlus[2]).epsilon(1e-7));

  for (std::size_t i = 0; i < fit.vertices.size(); ++i) {
    const double expected =
        fit.vertices[i].r - catenary_eval(fit.reference, fit.vertices[i].t);
    CHECK(fit.per_vertex_error[i] == doctest::Approx(expected).epsilon(1e-15));
  }
}

TEST_CASE("polyline m = 1 minus reproduces the published gap") {
  const CatenaryFit fit = build_polyline(Parity::Odd, 1, 2.0, Branch::Minus);
  REQUIRE(fit.vertices.size() == 4);
  CHECK(fit.vertices[1].r == doctest::Approx(golden::kYMinus1).epsilon(1e-10));
  // 0.5150 vs 0.5933: the gap is about 0.078
  CHECK(fit.max_abs_error ==
        doctest::Approx(golden::kMaxErrMinus[0]).epsilon(1e-7));
  CHECK(fit.reference.c == doctest::Approx(golden::kC2Minus).epsilon(1e-13));
}

TEST_CASE("even polyline layout") {
  const CatenaryFit fit = build_polyline(Parity::Even, 2, 2.0, Branch::Plus);
  REQUIRE(fit.vertices.size() == 5);  // 2m+1 vertices
  CHECK(fit.vertices[0].t == -1.0);
  CHECK(fit.vertices[2].t == 0.0);
  CHECK(fit.vertices[3].t == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(fit.vertices[2].r == doctest::Approx(golden::kEvenXPlus2).epsilon(1e-10));
  CHECK(fit.vertices[3].r == doctest::Approx(golden::kEvenG1Plus2).epsilon(1e-10));
}

TEST_CASE("polyline errors shrink as m grows") {
  for (const Branch branch : {Branch::Plus, Branch::Minus}) {
    const double e5 = build_polyline(Parity::Odd, 5, 2.0, branch).max_abs_error;
    const double e10 = build_polyline(Parity::Odd, 10, 2.0, branch).max_abs_error;
    CHECK(e10 < e5);
  }
}

TEST_CASE("frozen polyline max errors") {
  for (int i = 0; i < 6; ++i) {
    const int m = golden::kMaxErrMs[i];
    CHECK(build_polyline(Parity::Odd, m, 2.0, Branch::Plus).max_abs_error ==
          doctest::Approx(golden::kMaxErrPlus[i]).epsilon(1e-7));
    CHECK(build_polyline(Parity::Odd, m, 2.0, Branch::Minus).max_abs_error ==
          doctest::Approx(golden::kMaxErrMinus[i]).epsilon(1e-7));
  }
}

TEST_CASE("sup-norm error dominates the vertex error") {
  for (const Branch branch : {Branch::Plus, Branch::Minus}) {
    for (const int m : {1, 3, 8}) {
      const CatenaryFit fit = build_polyline(Parity::Odd, m, 2.0, branch);
      const double sup = sup_norm_error(fit);
      CHECK(sup >= fit.max_abs_error);

      // dense-sampling oracle over every edge
      double sampled = 0.0;
      for (std::size_t i = 0; i + 1 < fit.vertices.size(); ++i) {
        const auto& [t0, r0] = fit.vertices[i];
        const auto& [t1, r1] = fit.vertices[i + 1];
        for (int j = 0; j <= 2000; ++j) {
          const double t = t0 + (t1 - t0) * j / 2000.0;
          const double chord = r0 + (r1 - r0) * (t - t0) / (t1 - t0);
          sampled = std::max(sampled,
                             std::abs(chord - catenary_eval(fit.reference, t)));
        }
      }
      CHECK(sup == doctest::Approx(sampled).epsilon(1e-5));
      CHECK(sup >= sampled - 1e-12);
    }
  }
}

TEST_CASE("threshold inequality holds on dense grids") {
  const auto grid = oracles::linspace(1.0 / std::sqrt(2.0), 10.0, 100);
  CHECK(verify_threshold_inequality(1, grid));
  CHECK(verify_threshold_inequality(7, grid));
  CHECK(verify_threshold_inequality(20, grid));
  const std::vector<double> bad{0.5};
  CHECK_THROWS_AS(verify_threshold_inequality(1, bad), DomainError);
}

TEST_CASE("threshold gap is positive and recorded for m up to 20") {
  const double eta = catenary_constants().eta_inf;
  double prev_gap = 1.0;
  for (int m = 1; m <= 20; ++m) {
    const ProfileFamily fam{Parity::Odd, 2.0 / (2 * m + 1)};
    const double gap = eta - find_minimum(fam, m).second;
    CHECK(gap > 0.0);
    CHECK(gap < prev_gap);  // minima increase toward the threshold
    prev_gap = gap;
  }
}

TEST_CASE("profile limit errors decrease toward the catenary") {
  const std::vector<int> ms{10, 100, 1000};
  for (const Parity parity : {Parity::Even, Parity::Odd}) {
    const auto errors =
        profile_limit_errors(parity, Rational{1, 1}, golden::kC2Plus, ms);
    REQUIRE(errors.size() == 3);
    CHECK(errors[1] < errors[0]);
    CHECK(errors[2] < errors[1]);
    CHECK(errors.back() < 1e-3);
  }
  // t = 0 is exact: the zeroth profile is the identity
  const std::vector<int> any_m{3, 17};
  for (const double err :
       profile_limit_errors(Parity::Even, Rational{0, 1}, 1.3, any_m))
    CHECK(err == 0.0);
}

TEST_CASE("profile limit wants integral t*m") {
  const std::vector<int> ms{10, 15};
  CHECK_NOTHROW(profile_limit_errors(Parity::Even, Rational{1, 5}, 1.0, ms));
  const std::vector<int> bad{10, 12};
  CHECK_THROWS_AS(profile_limit_errors(Parity::Even, Rational{1, 5}, 1.0, bad),
                  DomainError);
  CHECK_THROWS_AS(profile_limit_errors(Parity::Even, Rational{1, 0}, 1.0, ms),
                  DomainError);
}

TEST_CASE("limit target matches the boundary construction") {
  // g_{m,1/m}(c) -> c cosh(1/c) = a at the boundary root, so the profile at
  // the plus root tends to a = 2
  const ProfileFamily fam{Parity::Even, 1.0 / 1000};
  const double value = profile_value(fam, 1000, golden::kC2Plus);
  CHECK(value == doctest::Approx(2.0).epsilon(1e-7));
}
