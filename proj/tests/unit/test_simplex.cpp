#include <gtest/gtest.h>

#include "gsimplex/instances.hpp"
#include "gsimplex/simplex.hpp"
#include "support/oracles.hpp"

using namespace gsimplex;

namespace {

template <class F>
std::optional<Error> error_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  return std::nullopt;
}

Point<Rational> qpoint(std::initializer_list<Rational> xs) { return Point<Rational>(std::vector<Rational>(xs)); }

const Tolerances<Rational> kExact = Tolerances<Rational>::defaults();

HilbertCubeSpec hilbert_spec(std::size_t N) { return {GeometricWeights{Rational(1, 2)}, N}; }

Objective<Rational> minus_ones(std::size_t n) {
  return Objective<Rational>(Coeffs<Rational>::dense(std::vector<Rational>(n, Rational(-1))));
}

}  // namespace

TEST(Gamma, HilbertOriginPicksFirstCoordinate) {
  auto spec = hilbert_spec(10);
  auto sys = build_hilbert_cube<Rational>(spec);
  auto obj = hilbert_cube_objective<Rational>(spec, [](std::size_t) { return Rational(-1); }, Rational(1));
  auto dec = gamma(sys, obj, Point<Rational>(10), NormPolicy::UnitEdge, kExact);
  EXPECT_EQ(dec.gamma, Rational(-1, 4));
  ASSERT_TRUE(dec.chosen);
  EXPECT_EQ(dec.chosen->leaving_id, -1);
  EXPECT_EQ(dec.chosen->adjacent[0], 1);
  EXPECT_EQ(dec.edges.size(), 10u);
}

TEST(Gamma, OptimalCubeVertexAndZeroObjective) {
  auto cube = build_cube<Rational>(3);
  auto dec = gamma(cube, minus_ones(3), qpoint({1, 1, 1}), NormPolicy::UnitEdge, kExact);
  EXPECT_EQ(dec.gamma, 1);
  EXPECT_FALSE(dec.chosen);
  ASSERT_TRUE(dec.steepest);
  Objective<Rational> zero(Coeffs<Rational>(3));
  auto z = gamma(cube, zero, qpoint({0, 1, 0}), NormPolicy::UnitEdge, kExact);
  EXPECT_EQ(z.gamma, 0);
  EXPECT_FALSE(z.chosen);
  EXPECT_EQ(z.tie_count, 3u);
}

TEST(Gamma, AmbientPolicyDividesByEdgeLength) {
  auto spec = hilbert_spec(5);
  auto sys = build_hilbert_cube<Rational>(spec);
  auto obj = hilbert_cube_objective<Rational>(spec, [](std::size_t) { return Rational(-1); }, Rational(1));
  auto dec = gamma(sys, obj, Point<Rational>(5), NormPolicy::Ambient, kExact);
  // rate_k = -4^{-k} / 2^{-k} = -2^{-k}; steepest is k = 1.
  EXPECT_EQ(dec.gamma, Rational(-1, 2));
  EXPECT_EQ(dec.chosen->leaving_id, -1);
}

TEST(SimplexRun, CubeFromOrigin) {
  auto cube = build_cube<Rational>(3);
  auto trace = simplex_run(cube, minus_ones(3), Point<Rational>(3), NormPolicy::UnitEdge, Limits<Rational>{});
  EXPECT_EQ(trace.pivot_count(), 3u);
  EXPECT_EQ(trace.iterates.back(), qpoint({1, 1, 1}));
  EXPECT_EQ(trace.values.back(), -3);
  EXPECT_EQ(trace.stop, StopReason::Optimal);
  EXPECT_EQ(trace.gammas.size(), trace.iterates.size());
}

TEST(SimplexRun, HilbertValueClosedForm) {
  const std::size_t N = 20;
  auto spec = hilbert_spec(N);
  auto sys = build_hilbert_cube<Rational>(spec);
  auto obj = hilbert_cube_objective<Rational>(spec, [](std::size_t) { return Rational(-1); }, Rational(1));
  auto trace = simplex_run(sys, obj, Point<Rational>(N), NormPolicy::UnitEdge, Limits<Rational>{});
  ASSERT_EQ(trace.pivot_count(), N);
  for (std::size_t n = 0; n <= N; ++n) {
    EXPECT_EQ(trace.values[n], support::hilbert_value(n));
    if (n < N) {
      EXPECT_EQ(trace.pivots[n].leaving_id, -static_cast<ConstraintId>(n + 1));
      EXPECT_EQ(trace.pivots[n].entering_id, static_cast<ConstraintId>(n + 1));
    }
  }
  ASSERT_EQ(trace.tail_rate_floors.size(), trace.iterates.size());
}

TEST(SimplexRun, AlreadyOptimalStartHasNoPivots) {
  auto cube = build_cube<Rational>(3);
  auto trace = simplex_run(cube, minus_ones(3), qpoint({1, 1, 1}), NormPolicy::UnitEdge, Limits<Rational>{});
  EXPECT_EQ(trace.pivot_count(), 0u);
  EXPECT_EQ(trace.stop, StopReason::Optimal);
}

TEST(SimplexRun, IterationLimit) {
  auto cube = build_cube<Rational>(3);
  Limits<Rational> limits;
  limits.max_iter = 2;
  auto trace = simplex_run(cube, minus_ones(3), Point<Rational>(3), NormPolicy::UnitEdge, limits);
  EXPECT_EQ(trace.pivot_count(), 2u);
  EXPECT_EQ(trace.stop, StopReason::IterLimit);
}

TEST(SimplexRun, GammaToleranceStopsTruncatedRun) {
  const std::size_t N = 20;
  auto spec = hilbert_spec(N);
  auto sys = build_hilbert_cube<double>(spec);
  auto obj = hilbert_cube_objective<double>(spec, [](std::size_t) { return Rational(-1); }, Rational(1));
  Limits<double> limits;  // tol.opt = 1e-9
  auto trace = simplex_run(sys, obj, Point<double>(N), NormPolicy::UnitEdge, limits);
  EXPECT_EQ(trace.stop, StopReason::GammaTol);
  // gamma(p^n) = -4^{-(n+1)} first reaches [-1e-9, 0) at n = 14.
  EXPECT_EQ(trace.pivot_count(), 14u);
}

TEST(SimplexRun, NonExtremeStartRejected) {
  auto cube = build_cube<Rational>(3);
  auto err = error_of([&] {
    simplex_run(cube, minus_ones(3), qpoint({0, 0, Rational(1, 2)}), NormPolicy::UnitEdge, Limits<Rational>{});
  });
  ASSERT_TRUE(err);
  EXPECT_EQ(err->kind(), ErrorKind::Precondition);
}

TEST(SimplexRun, DegeneracyCarriesIteration) {
  // Apex of a square pyramid has four tight facets; walking there must fail.
  std::vector<std::vector<Rational>> rows = {{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}, {0, 0, -1}};
  auto sys = build_finite(rows, std::vector<Rational>{1, 1, 1, 1, 0});
  Objective<Rational> up(Coeffs<Rational>(3, {{3, Rational(-1)}}));
  auto err = error_of([&] { simplex_run(sys, up, qpoint({1, 1, 0}), NormPolicy::UnitEdge, Limits<Rational>{}); });
  ASSERT_TRUE(err);
  EXPECT_EQ(err->kind(), ErrorKind::Degenerate);
  ASSERT_TRUE(err->iteration());
  EXPECT_GE(*err->iteration(), 1u);
}

TEST(Certificate, CubeExamples) {
  auto cube = build_cube<Rational>(3);
  EXPECT_TRUE(certify_optimal(cube, minus_ones(3), qpoint({1, 1, 1}), kExact).optimal);
  auto cert = certify_optimal(cube, minus_ones(3), qpoint({1, 1, 0}), kExact);
  EXPECT_FALSE(cert.optimal);
  ASSERT_TRUE(cert.witness);
  EXPECT_EQ(cert.witness->adjacent, qpoint({1, 1, 1}));
  Objective<Rational> zero(Coeffs<Rational>(3));
  EXPECT_TRUE(certify_optimal(cube, zero, qpoint({0, 1, 0}), kExact).optimal);
}

TEST(StopReasonNames, Strings) {
  EXPECT_EQ(to_string(StopReason::Optimal), "Optimal");
  EXPECT_EQ(to_string(StopReason::GammaTol), "GammaTol");
  EXPECT_EQ(to_string(StopReason::IterLimit), "IterLimit");
}
