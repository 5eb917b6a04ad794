#include "tornheim/kernels.hpp"
#include "tornheim/numeric.hpp"
#include "tornheim/verify.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace tornheim;

namespace {

kernels::Backend backend_of(const benchmark::State& state) {
  return state.range(0) == 0 ? kernels::Backend::serial : kernels::Backend::parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel x" + std::to_string(kernels::max_threads()));
}

void bm_diagonal_sum(benchmark::State& state) {
  const PrecisionConfig cfg;
  const Precision p = cfg.working();
  const long n = state.range(1);
  std::vector<Real> alpha(n + 1, Real(p)), beta(n + 1, Real(p)), gamma(2 * n + 1, Real(p));
  for (long i = 1; i <= n; ++i) {
    alpha[i] = Real(Rational(1, i * i), p);
    beta[i] = Real(Rational(i % 2 ? -1 : 1, i), p);
  }
  for (long i = 1; i <= 2 * n; ++i) gamma[i] = Real(Rational(1, i), p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::diagonal_sum(alpha, beta, gamma, 2 * n, n, backend_of(state)));
  }
  label(state);
}

void bm_naive_tornheim(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kernels::naive_tornheim(2, 2, 2, Sign::plus, Sign::minus, state.range(1), backend_of(state)));
  }
  label(state);
}

void bm_tornheim_q(benchmark::State& state) {
  const PrecisionConfig cfg;
  const QParam q(Rational(3, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tornheim_q(3, 2, 1, Sign::plus, Sign::minus, q, cfg, Window::triangular, backend_of(state)).value);
  }
  label(state);
}

void bm_lemma_sweep(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_lemma1_sweep(4, 4, {Rational(3, 2), Rational(2)}, backend_of(state)));
  }
  label(state);
}

}  // namespace

BENCHMARK(bm_diagonal_sum)->ArgsProduct({{0, 1}, {200, 800}})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_naive_tornheim)->ArgsProduct({{0, 1}, {1000, 4000}})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_tornheim_q)->ArgsProduct({{0, 1}, {0}})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_lemma_sweep)->ArgsProduct({{0, 1}, {0}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
