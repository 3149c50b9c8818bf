#include <random>

#include <benchmark/benchmark.h>

#include "descent/exact.hpp"
#include "descent/expfun.hpp"
#include "descent/presets.hpp"
#include "descent/spectral.hpp"

using namespace descent;

namespace {

void BM_MatExp(benchmark::State& state) {
  const auto d = static_cast<Eigen::Index>(state.range(0));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  linalg::CMatrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = linalg::Complex(g(rng), g(rng));
  }
  for (auto _ : state) benchmark::DoNotOptimize(linalg::mat_exp(m));
}
BENCHMARK(BM_MatExp)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(64);

void BM_DetP(benchmark::State& state) {
  const auto t = spectral::build_transfer(preset("sec5-1").scheme);
  for (auto _ : state) benchmark::DoNotOptimize(spectral::det_P(t, 0.9240358576));
}
BENCHMARK(BM_DetP);

void BM_Spectrum(benchmark::State& state) {
  const auto t = spectral::build_transfer(preset("sec5-2").scheme);
  for (auto _ : state) benchmark::DoNotOptimize(spectral::spectrum(t));
}
BENCHMARK(BM_Spectrum)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_DpAlpha(benchmark::State& state) {
  const auto& s = preset("sec5-1").scheme;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact::dp_alpha(s, n));
}
BENCHMARK(BM_DpAlpha)->Arg(10)->Arg(20)->Arg(40);

void BM_DpAlphaRational(benchmark::State& state) {
  WeightScheme s(3);
  s.set_wt(ABWord::parse("aba"), Rational(1, 3));
  s.set_wt(ABWord::parse("bbb"), Rational(5, 2));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact::dp_alpha(s, n));
}
BENCHMARK(BM_DpAlphaRational)->Arg(10)->Arg(20);

void BM_BruteForce(benchmark::State& state) {
  const auto& s = preset("sec5-1").scheme;
  for (auto _ : state) benchmark::DoNotOptimize(exact::brute_force_alpha(s, 9));
}
BENCHMARK(BM_BruteForce)->Unit(benchmark::kMillisecond);

void BM_OperatorIteration(benchmark::State& state) {
  const auto& s = preset("sec5-1").scheme;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expfun::alpha_by_operator_iteration(s, n));
}
BENCHMARK(BM_OperatorIteration)->Arg(8)->Arg(12)->Arg(16);

void BM_Constant(benchmark::State& state) {
  const auto& s = preset("sec5-1").scheme;
  const auto t = spectral::build_transfer(s);
  const auto points = spectral::find_real_roots(t, 0.5, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(expfun::asymptotic_model(s, points, 1, 0.05));
}
BENCHMARK(BM_Constant);

}  // namespace

BENCHMARK_MAIN();
