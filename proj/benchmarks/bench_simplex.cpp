#include <benchmark/benchmark.h>

#include "gsimplex/instances.hpp"
#include "gsimplex/oracle.hpp"
#include "gsimplex/simplex.hpp"
#include "gsimplex/validators.hpp"

using namespace gsimplex;

namespace {

HilbertCubeSpec hilbert(std::size_t n) { return {GeometricWeights{Rational(1, 2)}, n}; }

template <class T>
void BM_HilbertRun(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  auto spec = hilbert(n);
  auto sys = build_hilbert_cube<T>(spec);
  auto obj = hilbert_cube_objective<T>(spec, [](std::size_t) { return Rational(-1); }, Rational(1));
  Limits<T> lim;
  if constexpr (!ScalarTraits<T>::exact) lim.tol.opt = 1e-15;
  for (auto _ : state) {
    auto trace = simplex_run(sys, obj, Point<T>(n), NormPolicy::UnitEdge, lim);
    benchmark::DoNotOptimize(trace.values.back());
  }
  state.SetComplexityN(state.range(0));
}

template <class T>
void BM_EnumerateCube(benchmark::State& state) {
  auto sys = build_cube<T>(static_cast<std::size_t>(state.range(0)));
  const auto tol = Tolerances<T>::defaults();
  for (auto _ : state) {
    auto vs = enumerate_vertices(sys, tol);
    benchmark::DoNotOptimize(vs.vertices.size());
  }
}

void BM_RandomLpRun(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  auto qsys = build_random_lp({n, 2 * n + 4, 42});
  auto sys = convert<double>(qsys);
  auto obj = convert<double>(random_objective(n, 42));
  const auto tol = Tolerances<double>::defaults();
  auto start = enumerate_vertices(sys, tol).vertices.front();
  for (auto _ : state) {
    auto trace = simplex_run(sys, obj, start, NormPolicy::UnitEdge, Limits<double>{});
    benchmark::DoNotOptimize(trace.values.back());
  }
}

void BM_AuditHilbert(benchmark::State& state) {
  auto spec = hilbert(20);
  auto sys = build_hilbert_cube<Rational>(spec);
  auto obj = hilbert_cube_objective<Rational>(spec, [](std::size_t) { return Rational(-1); }, Rational(1));
  SampleSpec s;
  s.kind = SampleKind::RandomBinary;
  s.size = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto report = audit(sys, &obj, NormPolicy::UnitEdge, s, Tolerances<Rational>::defaults());
    benchmark::DoNotOptimize(report.nu);
  }
}

}  // namespace

BENCHMARK_TEMPLATE(BM_HilbertRun, double)->RangeMultiplier(2)->Range(8, 64)->Complexity();
BENCHMARK_TEMPLATE(BM_HilbertRun, Rational)->RangeMultiplier(2)->Range(8, 32)->Complexity();
BENCHMARK_TEMPLATE(BM_EnumerateCube, double)->DenseRange(3, 6);
BENCHMARK_TEMPLATE(BM_EnumerateCube, Rational)->DenseRange(3, 5);
BENCHMARK(BM_RandomLpRun)->DenseRange(2, 5);
BENCHMARK(BM_AuditHilbert)->Arg(16)->Arg(64);
BENCHMARK_MAIN();
