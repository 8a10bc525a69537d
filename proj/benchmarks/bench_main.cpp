#include "g2holo/atlas.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace g2holo;

QMat random_matrix(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  QMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = QSqrt2(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
  return m;
}

void BM_RrefDense(benchmark::State& state) {
  std::mt19937 rng(42);
  const int n = static_cast<int>(state.range(0));
  QMat m = random_matrix(rng, n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rref(m).rank);
  }
}
BENCHMARK(BM_RrefDense)->Arg(7)->Arg(20);

void BM_KernelBianchiHIII(benchmark::State& state) {
  const auto& basis = family(FamilyName::HIII).basis;
  for (auto _ : state) {
    benchmark::DoNotOptimize(curvature_space(basis, 7).dimension);
  }
}
BENCHMARK(BM_KernelBianchiHIII)->Unit(benchmark::kMillisecond);

void BM_HolonomyFamily(benchmark::State& state) {
  MetricLieAlgebra m = example_family(QSqrt2(1));
  for (auto _ : state) {
    Connection c = levi_civita(m);
    benchmark::DoNotOptimize(holonomy(m, c).flat.dim());
  }
}
BENCHMARK(BM_HolonomyFamily)->Unit(benchmark::kMillisecond);

void BM_EnvelopeG2(benchmark::State& state) {
  Representation rep{family(FamilyName::G2Star).basis, standard_gram()};
  for (auto _ : state) {
    benchmark::DoNotOptimize(assoc_envelope(rep).flat.dim());
  }
}
BENCHMARK(BM_EnvelopeG2)->Unit(benchmark::kMillisecond);

void BM_EpsilonInvariant(benchmark::State& state) {
  MetricLieAlgebra m = example_family(QSqrt2(5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(epsilon_invariant(m));
  }
}
BENCHMARK(BM_EpsilonInvariant)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
