#include <benchmark/benchmark.h>

#include "qig/qig.hpp"

using namespace qig;

namespace {

ParameterVector default_theta(int m) {
  ParameterVector t(m);
  for (int j = 0; j < m; ++j) t[j] = 0.3 + 0.1 * j;
  return t;
}

void PullbackTensor(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PureStateModel model = make_random_pure(n, 3, 42);
  const ParameterVector theta = default_theta(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_tensor(model, theta));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(PullbackTensor)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void PullbackDecompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PureStateModel model = make_random_pure(n, 3, 42);
  const ParameterVector theta = default_theta(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(model, theta));
  }
}
BENCHMARK(PullbackDecompose)->RangeMultiplier(2)->Range(4, 64);

void PullbackTensorCentralDifferences(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PureStateModel model =
      make_random_pure(n, 3, 42).with_mode(DerivativeMode::FiniteDifference);
  const ParameterVector theta = default_theta(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_tensor(model, theta));
  }
}
BENCHMARK(PullbackTensorCentralDifferences)->RangeMultiplier(2)->Range(4, 32);

void SldSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DensityModel model = make_random_density(n, 3, 42);
  const ParameterVector theta = default_theta(3);
  const DensityMatrixJet jet = differentiate(model, theta);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sld_solve(jet.value, jet.partials));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(SldSolve)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void ClassicalFisherGaussianGrid(benchmark::State& state) {
  const double step = 1.0 / static_cast<double>(state.range(0));
  const ProbabilityModel model =
      make_gaussian_grid(1.0, SampleSpace::uniform_grid(-8.0, 8.0, step));
  const ParameterVector theta = default_theta(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(classical_fisher_matrix(model, theta));
  }
}
BENCHMARK(ClassicalFisherGaussianGrid)->RangeMultiplier(4)->Range(16, 256);

void QfiPureFast(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PureStateModel model = make_random_pure(n, 3, 42);
  const ParameterVector theta = default_theta(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qfi_pure_fast(model, theta));
  }
}
BENCHMARK(QfiPureFast)->RangeMultiplier(2)->Range(4, 64);

}  // namespace

BENCHMARK_MAIN();
