#include <gtest/gtest.h>

#include "gsimplex/geometry.hpp"
#include "gsimplex/instances.hpp"
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
const Tolerances<double> kFloat = Tolerances<double>::defaults();

ConstraintSystem<Rational> hilbert(std::size_t N) {
  return build_hilbert_cube<Rational>({GeometricWeights{Rational(1, 2)}, N});
}

// Square pyramid apex: four facets through one point in R^3.
ConstraintSystem<Rational> pyramid() {
  std::vector<std::vector<Rational>> rows = {{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}, {0, 0, -1}};
  std::vector<Rational> bounds = {1, 1, 1, 1, 0};
  return build_finite(rows, bounds);
}

}  // namespace

TEST(IsExtreme, CubeAndHilbertExamples) {
  auto cube = build_cube<Rational>(3);
  EXPECT_TRUE(is_extreme(cube, qpoint({1, 0, 1}), kExact));
  EXPECT_FALSE(is_extreme(cube, qpoint({0, 0, Rational(1, 2)}), kExact));
  auto hc = hilbert(4);
  for (unsigned mask = 0; mask < 16; ++mask) {
    Point<Rational> p(4);
    for (unsigned j = 0; j < 4; ++j) p[j] = (mask >> j) & 1U;
    EXPECT_TRUE(is_extreme(hc, p, kExact));
  }
  EXPECT_EQ(error_of([&] { is_extreme(cube, qpoint({2, 0, 0}), kExact); })->kind(), ErrorKind::Infeasible);
}

TEST(IsExtreme, FloatAgreesWithExact) {
  auto cube = build_cube<double>(3);
  EXPECT_TRUE(is_extreme(cube, Point<double>(std::vector<double>{1, 0, 1}), kFloat));
  EXPECT_FALSE(is_extreme(cube, Point<double>(std::vector<double>{0, 0, 0.5}), kFloat));
}

TEST(EdgeLine, OrientedIntoLeavingHalfspace) {
  auto cube = build_cube<Rational>(3);
  Coeffs<Rational> d = edge_line(cube, Point<Rational>(3), -1, kExact);
  EXPECT_EQ(d, Coeffs<Rational>(3, {{1, Rational(1)}}));
  Coeffs<Rational> d3 = edge_line(cube, qpoint({1, 1, 1}), 3, kExact);
  EXPECT_EQ(d3, Coeffs<Rational>(3, {{3, Rational(-1)}}));
  auto hc = hilbert(6);
  for (std::size_t k = 1; k <= 6; ++k) {
    Coeffs<Rational> dk = edge_line(hc, Point<Rational>(6), -static_cast<ConstraintId>(k), kExact);
    EXPECT_EQ(dk, Coeffs<Rational>(6, {{k, Rational(1)}}));
  }
}

TEST(EdgeLine, FloatDirectionHasUnitAmbientNorm) {
  auto hc = build_hilbert_cube<double>({GeometricWeights{Rational(1, 2)}, 5});
  Coeffs<double> d = edge_line(hc, Point<double>(5), -3, kFloat);
  EXPECT_NEAR(norm_X(hc, d), 1.0, 1e-14);
  EXPECT_GT(d[3], 0.0);
  EXPECT_EQ(d.entries().size(), 1u);
}

TEST(EdgeLine, DegenerateApexRejected) {
  auto sys = pyramid();
  Point<Rational> apex = qpoint({0, 0, 1});
  auto err = error_of([&] { edge_line(sys, apex, 1, kExact); });
  ASSERT_TRUE(err);
  EXPECT_EQ(err->kind(), ErrorKind::Degenerate);
  EXPECT_EQ(err->constraint_id(), 1);
}

TEST(EdgeLine, LeavingMustBeActive) {
  auto cube = build_cube<Rational>(2);
  EXPECT_EQ(error_of([&] { edge_line(cube, Point<Rational>(2), 1, kExact); })->kind(), ErrorKind::Precondition);
  EXPECT_EQ(error_of([&] { edge_line(cube, qpoint({0, Rational(1, 2)}), -1, kExact); })->kind(), ErrorKind::Precondition);
}

TEST(RatioTest, Examples) {
  auto cube = build_cube<Rational>(3);
  RatioStep<Rational> r = ratio_test(cube, Point<Rational>(3), Coeffs<Rational>(3, {{1, Rational(1)}}), kExact);
  EXPECT_EQ(r.step, 1);
  EXPECT_EQ(r.entering_id, 1);
  EXPECT_EQ(r.adjacent, qpoint({1, 0, 0}));

  auto hc = hilbert(8);
  RatioStep<Rational> h = ratio_test(hc, Point<Rational>(8), Coeffs<Rational>(8, {{5, Rational(1)}}), kExact);
  EXPECT_EQ(h.step, 1);
  EXPECT_EQ(h.entering_id, 5);
  EXPECT_EQ(h.adjacent[4], 1);

  auto simplex = build_simplex<Rational>(2);
  RatioStep<Rational> s =
      ratio_test(simplex, qpoint({1, 0}), Coeffs<Rational>(2, {{1, Rational(-1)}, {2, Rational(1)}}), kExact);
  EXPECT_EQ(s.step, 1);
  EXPECT_EQ(s.adjacent, qpoint({0, 1}));
  EXPECT_EQ(s.entering_id, -1);
}

TEST(RatioTest, UnboundedRayRejected) {
  using C = Constraint<Rational>;
  ConstraintSystem<Rational> orthant({C{-1, Coeffs<Rational>(2, {{1, Rational(-1)}}), 0},
                                      C{-2, Coeffs<Rational>(2, {{2, Rational(-1)}}), 0}},
                                     {1, 1});
  EXPECT_EQ(error_of([&] { ratio_test(orthant, Point<Rational>(2), Coeffs<Rational>(2, {{1, Rational(1)}}), kExact); })
                ->kind(),
            ErrorKind::Unbounded);
  auto edges_err = error_of([&] {
    adjacent_extreme_points(orthant, Point<Rational>(2), NormPolicy::UnitEdge, static_cast<const Objective<Rational>*>(nullptr), kExact);
  });
  ASSERT_TRUE(edges_err);
  EXPECT_EQ(edges_err->kind(), ErrorKind::Unbounded);
  EXPECT_EQ(edges_err->constraint_id(), -1);
}

TEST(RatioTest, TiesGoToFirstCanonicalId) {
  // x_1 <= 1 and x_1 + x_2 <= 1 both block at step 1 from the origin along e_1.
  std::vector<std::vector<Rational>> rows = {{1, 1}, {1, 0}, {-1, 0}, {0, -1}};
  auto sys = build_finite(rows, std::vector<Rational>{1, 1, 0, 0});
  RatioStep<Rational> r = ratio_test(sys, Point<Rational>(2), Coeffs<Rational>(2, {{1, Rational(1)}}), kExact);
  EXPECT_EQ(r.entering_id, 1);
}

TEST(AdjacentExtremePoints, CubeSimplexHilbert) {
  auto cube = build_cube<Rational>(3);
  auto edges = adjacent_extreme_points(cube, Point<Rational>(3), NormPolicy::UnitEdge,
                                       static_cast<const Objective<Rational>*>(nullptr), kExact);
  ASSERT_EQ(edges.size(), 3u);
  EXPECT_EQ(edges[0].adjacent, qpoint({1, 0, 0}));
  EXPECT_EQ(edges[1].adjacent, qpoint({0, 1, 0}));
  EXPECT_EQ(edges[2].adjacent, qpoint({0, 0, 1}));

  auto simplex = build_simplex<Rational>(2);
  auto sedges = adjacent_extreme_points(simplex, Point<Rational>(2), NormPolicy::UnitEdge,
                                        static_cast<const Objective<Rational>*>(nullptr), kExact);
  ASSERT_EQ(sedges.size(), 2u);
  EXPECT_EQ(sedges[0].adjacent, qpoint({1, 0}));
  EXPECT_EQ(sedges[1].adjacent, qpoint({0, 1}));

  const std::size_t N = 10;
  auto hc = hilbert(N);
  auto hedges = adjacent_extreme_points(hc, Point<Rational>(N), NormPolicy::Ambient,
                                        static_cast<const Objective<Rational>*>(nullptr), kExact);
  ASSERT_EQ(hedges.size(), N);
  for (std::size_t k = 0; k < N; ++k) {
    Point<Rational> expect(N);
    expect[k] = 1;
    EXPECT_EQ(hedges[k].adjacent, expect);
    EXPECT_EQ(hedges[k].length, support::pow4_inv(k + 1) * (mpz_class(1) << static_cast<mp_bitcnt_t>(k + 1)));
  }
}

TEST(AdjacentExtremePoints, CostsAttachedWhenObjectiveGiven) {
  auto cube = build_cube<Rational>(3);
  Objective<Rational> obj(Coeffs<Rational>::dense(std::vector<Rational>{-1, 2, 0}));
  auto edges = adjacent_extreme_points(cube, Point<Rational>(3), NormPolicy::UnitEdge, &obj, kExact);
  ASSERT_TRUE(edges[0].cost);
  EXPECT_EQ(*edges[0].cost, -1);
  EXPECT_EQ(*edges[1].cost, 2);
  EXPECT_EQ(*edges[2].cost, 0);
  EXPECT_EQ(edges[1].rate(), 2);
}

TEST(Schauder, HilbertCoefficientsAndResiduals) {
  const std::size_t N = 6;
  auto hc = hilbert(N);
  Point<Rational> x(N);
  x[0] = Rational(1, 2);
  x[1] = Rational(1, 3);
  auto dec = schauder_decompose(hc, Point<Rational>(N), x, kExact);
  ASSERT_EQ(dec.coefficients.size(), N);
  EXPECT_EQ(dec.coefficients[0].theta, Rational(1, 2));
  EXPECT_EQ(dec.coefficients[1].theta, Rational(1, 3));
  for (std::size_t k = 2; k < N; ++k) EXPECT_EQ(dec.coefficients[k].theta, 0);
  EXPECT_EQ(reconstruct(dec, N), x);
  EXPECT_EQ(reconstruct(dec, 0), Point<Rational>(N));
  EXPECT_EQ(error_of([&] { reconstruct(dec, N + 1); })->kind(), ErrorKind::Bounds);
}

TEST(Schauder, AllOnesTwoTermResidual) {
  const std::size_t N = 20;
  auto hc = hilbert(N);
  auto dec = schauder_decompose(hc, Point<Rational>(N), Point<Rational>(std::vector<Rational>(N, Rational(1))), kExact);
  EXPECT_EQ(dec.residuals_sq[2], support::hilbert_tail(2, N));
  EXPECT_EQ(dec.residuals_sq[2] + support::pow4_inv(N) / 3, Rational(1, 48));
  EXPECT_EQ(dec.residuals_sq[N], 0);
}

TEST(Schauder, IdentityAndCube) {
  auto cube = build_cube<Rational>(3);
  Point<Rational> p = qpoint({1, 0, 1});
  auto same = schauder_decompose(cube, p, p, kExact);
  for (const auto& t : same.coefficients) EXPECT_EQ(t.theta, 0);
  for (const auto& r : same.residuals_sq) EXPECT_EQ(r, 0);
  auto full = schauder_decompose(cube, Point<Rational>(3), qpoint({1, 1, 1}), kExact);
  for (const auto& t : full.coefficients) EXPECT_EQ(t.theta, 1);
  EXPECT_EQ(full.residual(3), 0);
}

TEST(Schauder, PreconditionsEnforced) {
  auto cube = build_cube<Rational>(3);
  EXPECT_EQ(error_of([&] { schauder_decompose(cube, qpoint({0, 0, Rational(1, 2)}), qpoint({1, 1, 1}), kExact); })->kind(),
            ErrorKind::Precondition);
  EXPECT_EQ(error_of([&] { schauder_decompose(cube, Point<Rational>(3), qpoint({2, 1, 1}), kExact); })->kind(),
            ErrorKind::Infeasible);
}

TEST(NormPolicyNames, RoundTrip) {
  EXPECT_EQ(parse_norm_policy("unit-edge"), NormPolicy::UnitEdge);
  EXPECT_EQ(parse_norm_policy(to_string(NormPolicy::Ambient)), NormPolicy::Ambient);
  EXPECT_EQ(error_of([] { parse_norm_policy("l1"); })->kind(), ErrorKind::Parse);
}
