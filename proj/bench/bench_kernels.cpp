#include <benchmark/benchmark.h>

#include <cmath>

#include "graze/grazing.hpp"
#include "graze/quadrature.hpp"
#include "graze/spectral.hpp"

using namespace graze;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& st) { st.SetLabel(st.range(0) ? "parallel" : "serial"); }

void BM_Integrate1d(benchmark::State& st) {
  IntegrandSpec s;
  s.evaluator = [](double u) { return std::exp(cplx(-u * u, 40.0 * u + u * u * u)); };
  s.damping = {1.0, 2.0, 0.0, 1.0};
  s.oscillation_scale = 40.0;
  for (auto _ : st) benchmark::DoNotOptimize(integrate_1d(s, 1e-12, exec_of(st)));
  label(st);
}

void BM_IntegrateNd(benchmark::State& st) {
  NdIntegrandSpec s;
  s.evaluator = [](std::span<const double> v) {
    const double r2 = v[0] * v[0] + v[1] * v[1];
    return std::exp(cplx(-r2 / 10.0, r2));
  };
  s.damping = {{0.1, 2.0, 0.0, 1.0}, {0.1, 2.0, 0.0, 1.0}};
  s.oscillation_scale = 20.0;
  for (auto _ : st) benchmark::DoNotOptimize(integrate_nd(s, 2, 1e-9, exec_of(st)));
  label(st);
}

void BM_ULadder(benchmark::State& st) {
  const std::vector<double> ks{1e3, 1e4, 1e5, 1e6};
  for (auto _ : st) benchmark::DoNotOptimize(u_integral_ladder(1.0, ks, 1e-10, exec_of(st)));
  label(st);
}

void BM_ExactSolution(benchmark::State& st) {
  ExactSolutionOptions opt;
  opt.tol = 1e-3;
  opt.exec = exec_of(st);
  const double x = 0.5, y = 2 * std::sqrt(x), t = y + 2.0 / 3.0 * x * std::sqrt(x);
  for (auto _ : st) benchmark::DoNotOptimize(exact_solution(x, y, t, 40.0, opt));
  label(st);
}

}  // namespace

BENCHMARK(BM_Integrate1d)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_IntegrateNd)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ULadder)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactSolution)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
