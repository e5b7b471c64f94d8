#include <benchmark/benchmark.h>

#include "hefp/comparators.hpp"
#include "hefp/extrapolant.hpp"
#include "hefp/heisenberg_euler.hpp"
#include "hefp/moment_solver.hpp"
#include "hefp/special_functions.hpp"

using namespace hefp;

static void BM_HurwitzSderiv(benchmark::State& state) {
  const auto ctx = PrecisionContext::with_precision(static_cast<int>(state.range(0)));
  ScopedPrecision s(ctx);
  const Complex a(Real("0.75"), Real("0.5"));
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_zeta_sderiv_neg1(a, ctx));
}
BENCHMARK(BM_HurwitzSderiv)->Arg(40)->Arg(120)->Arg(300)->Unit(benchmark::kMicrosecond);

static void BM_ExactElectric(benchmark::State& state) {
  const auto ctx = PrecisionContext::with_precision(60);
  ScopedPrecision s(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(exact_electric(Real(4), ctx));
}
BENCHMARK(BM_ExactElectric)->Unit(benchmark::kMicrosecond);

static void BM_WeakFieldCoeffs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ctx = PrecisionContext::with_precision(n + 20);
  for (auto _ : state) benchmark::DoNotOptimize(weak_field_coeffs(n, ctx));
}
BENCHMARK(BM_WeakFieldCoeffs)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_MomentSolve(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto ctx = PrecisionContext::with_precision(d + 21);
  const auto system = build_system(weak_field_coeffs(d + 2, ctx), d, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(solve(system, ctx));
}
BENCHMARK(BM_MomentSolve)->Arg(24)->Arg(49)->Arg(99)->Unit(benchmark::kMillisecond);

static void BM_Extrapolant(benchmark::State& state) {
  const int d = 49;
  const auto ctx = PrecisionContext::with_precision(70);
  ScopedPrecision s(ctx);
  const auto sol = solve(build_system(weak_field_coeffs(d + 2, ctx), d, ctx), ctx);
  const NegativeMomentTable mu(sol, 2 * d, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(extrapolate_electric(Real(4), sol, mu, std::nullopt, ctx));
}
BENCHMARK(BM_Extrapolant)->Unit(benchmark::kMillisecond);

static void BM_NegativeMomentTable(benchmark::State& state) {
  const int d = 49;
  const auto ctx = PrecisionContext::with_precision(70);
  ScopedPrecision s(ctx);
  const auto sol = solve(build_system(weak_field_coeffs(d + 2, ctx), d, ctx), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(NegativeMomentTable(sol, 2 * d, ctx));
}
BENCHMARK(BM_NegativeMomentTable)->Unit(benchmark::kMillisecond);

static void BM_Pade(benchmark::State& state) {
  const auto ctx = PrecisionContext::with_precision(150);
  ScopedPrecision s(ctx);
  const auto coeffs = weak_field_coeffs(105, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(pade_eval(pade_build(coeffs, 49, 50, ctx), Real(4), ctx));
}
BENCHMARK(BM_Pade)->Unit(benchmark::kMillisecond);

static void BM_WenigerDelta(benchmark::State& state) {
  const auto ctx = PrecisionContext::with_precision(140);
  ScopedPrecision s(ctx);
  const auto coeffs = weak_field_coeffs(105, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(weniger_delta(coeffs, 100, Real(-4), ctx));
}
BENCHMARK(BM_WenigerDelta)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
