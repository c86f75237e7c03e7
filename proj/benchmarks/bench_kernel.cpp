#include <benchmark/benchmark.h>

#include "coxlab/classify.hpp"
#include "coxlab/field.hpp"
#include "coxlab/graph.hpp"
#include "coxlab/hyperbolicity.hpp"
#include "coxlab/matrix.hpp"

namespace {

using namespace coxlab;

void BM_FieldMultiply(benchmark::State& state) {
  const FieldElement a = FieldElement(3L) - FieldElement::sqrt(5) * FieldElement::rational(2, 7);
  const FieldElement b = FieldElement::sqrt(2) + FieldElement::sqrt(15) * FieldElement::rational(5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_FieldMultiply);

void BM_FieldInverse(benchmark::State& state) {
  const FieldElement a = FieldElement(1L) + FieldElement::sqrt(2) + FieldElement::sqrt(3) + FieldElement::sqrt(5);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_FieldInverse);

void BM_SignNearZero(benchmark::State& state) {
  const FieldElement close = FieldElement::sqrt(2) - FieldElement::rational(665857, 470832);
  for (auto _ : state) benchmark::DoNotOptimize(close.sign());
}
BENCHMARK(BM_SignNearZero);

void BM_DetElimination(benchmark::State& state) {
  const CosineMatrix m = cosine_matrix(sigma_family(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(det_elimination(m));
}
BENCHMARK(BM_DetElimination)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);

void BM_DetVinberg(benchmark::State& state) {
  const CoxeterGraph g = sigma_family(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(det_vinberg(g));
}
BENCHMARK(BM_DetVinberg)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);

void BM_Inertia(benchmark::State& state) {
  const CosineMatrix m = cosine_matrix(sigma_family(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(inertia(m));
}
BENCHMARK(BM_Inertia)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);

void BM_MinimalInfinite(benchmark::State& state) {
  const CoxeterGraph g = sigma_family(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(search_minimal_infinite(g));
}
BENCHMARK(BM_MinimalInfinite)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Hyperbolicity(benchmark::State& state) {
  const CoxeterGraph g = sigma_family(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_word_hyperbolic(g));
}
BENCHMARK(BM_Hyperbolicity)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
