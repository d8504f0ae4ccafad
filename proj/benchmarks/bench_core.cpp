#include <benchmark/benchmark.h>

#include "ptc/catenary.hpp"
#include "ptc/profile.hpp"
#include "ptc/solver.hpp"
#include "ptc/stability.hpp"

namespace {

using namespace ptc;

void BM_ProfileChebyshev(benchmark::State& state) {
  const ProfileFamily family{Parity::Odd, 0.25};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        profile_value(family, n, 1.3, EvalRoute::ChebyshevRecurrence));
}
BENCHMARK(BM_ProfileChebyshev)->Arg(4)->Arg(16)->Arg(64)->Arg(256);

void BM_ProfileSeries(benchmark::State& state) {
  const ProfileFamily family{Parity::Odd, 0.25};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        profile_value(family, n, 1.3, EvalRoute::HypergeometricSeries));
}
BENCHMARK(BM_ProfileSeries)->Arg(4)->Arg(16)->Arg(64)->Arg(256);

void BM_ProfileRadical(benchmark::State& state) {
  const ProfileFamily family{Parity::Odd, 0.25};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        profile_value(family, n, 1.3, EvalRoute::ClosedRadical));
}
BENCHMARK(BM_ProfileRadical)->Arg(4)->Arg(16)->Arg(64)->Arg(256);

void BM_SolveBranches(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const ProfileFamily family{Parity::Odd, 2.0 / (2 * m + 1)};
  for (auto _ : state) benchmark::DoNotOptimize(solve_branches(family, m, 2.0));
}
BENCHMARK(BM_SolveBranches)->Arg(1)->Arg(4)->Arg(16);

void BM_BuildSurfaceAndClassify(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const ProfileFamily family{Parity::Odd, 2.0 / (2 * m + 1)};
  for (auto _ : state) {
    const PtcSurface s = build_surface(family, m, 2.0, Branch::Plus);
    benchmark::DoNotOptimize(assemble_hessian(s).positive_definite());
  }
}
BENCHMARK(BM_BuildSurfaceAndClassify)->Arg(2)->Arg(8);

void BM_DeterminantIdentity(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const ProfileFamily family{Parity::Odd, 0.2};
  for (auto _ : state)
    benchmark::DoNotOptimize(determinant_identity_check(family, m, 1.1));
}
BENCHMARK(BM_DeterminantIdentity)->Arg(2)->Arg(8)->Arg(32);

void BM_BuildPolyline(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(build_polyline(Parity::Odd, m, 2.0, Branch::Minus));
}
BENCHMARK(BM_BuildPolyline)->Arg(5)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
