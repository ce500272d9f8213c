#include <gtest/gtest.h>

#include "gsimplex/geometry.hpp"
#include "gsimplex/instances.hpp"
#include "gsimplex/oracle.hpp"
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

support::Matrix rows_of(const ConstraintSystem<Rational>& sys) {
  support::Matrix A;
  for (const auto& c : sys.constraints()) A.push_back(c.functional.to_dense());
  return A;
}

std::vector<Rational> bounds_of(const ConstraintSystem<Rational>& sys) {
  std::vector<Rational> b;
  for (const auto& c : sys.constraints()) b.push_back(c.bound);
  return b;
}

}  // namespace

TEST(HilbertCube, ShapeAndExtremePoints) {
  auto sys = build_hilbert_cube<Rational>({GeometricWeights{Rational(1, 2)}, 3});
  EXPECT_EQ(sys.size(), 6u);
  EXPECT_EQ(sys.extent(), Extent::Truncated);
  EXPECT_EQ(sys.weights(), (std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(1, 8)}));
  auto vs = support::cramer_vertices(rows_of(sys), bounds_of(sys));
  EXPECT_EQ(vs.size(), 8u);
  for (const auto& v : vs) EXPECT_TRUE(is_extreme(sys, Point<Rational>(v.x), kExact));
  auto one = build_hilbert_cube<Rational>({GeometricWeights{Rational(1, 2)}, 1});
  EXPECT_EQ(one.size(), 2u);
  EXPECT_EQ(one.constraint(1).bound, 1);
  EXPECT_EQ(one.constraint(-1).bound, 0);
}

TEST(HilbertCube, InvalidWeightsRejected) {
  EXPECT_EQ(error_of([] { build_hilbert_cube<Rational>({GeometricWeights{Rational(1)}, 3}); })->kind(), ErrorKind::Spec);
  EXPECT_EQ(error_of([] { build_hilbert_cube<Rational>({GeometricWeights{Rational(-1, 2)}, 3}); })->kind(), ErrorKind::Spec);
  EXPECT_EQ(error_of([] { build_hilbert_cube<Rational>({ExplicitWeights{{Rational(1, 2)}}, 3}); })->kind(), ErrorKind::Spec);
  EXPECT_EQ(error_of([] { build_hilbert_cube<Rational>({ExplicitWeights{{Rational(1, 2), Rational(3, 2)}}, 2}); })->kind(),
            ErrorKind::Spec);
  EXPECT_EQ(error_of([] { build_hilbert_cube<Rational>({GeometricWeights{Rational(1, 2)}, 0}); })->kind(), ErrorKind::Spec);
}

TEST(HilbertCube, ObjectiveCoefficientsAndTail) {
  HilbertCubeSpec spec{GeometricWeights{Rational(1, 2)}, 4};
  auto obj = hilbert_cube_objective<Rational>(spec, [](std::size_t) { return Rational(-1); }, Rational(1));
  for (std::size_t j = 1; j <= 4; ++j) EXPECT_EQ(obj.linear[j], -support::pow4_inv(j));
  ASSERT_TRUE(obj.tail_bound);
  // sum_{k > 4} 4^{-k} = 4^{-4} / 3
  EXPECT_EQ(*obj.tail_bound, support::pow4_inv(4) / 3);
  EXPECT_EQ(error_of([&] { hilbert_cube_objective<Rational>(spec, [](std::size_t) { return Rational(2); }, Rational(1)); })
                ->kind(),
            ErrorKind::Spec);
}

TEST(Finite, CubeAndSimplexShapes) {
  std::vector<std::vector<Rational>> rows = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  auto box = build_finite(rows, std::vector<Rational>{1, 0, 1, 0, 1, 0});
  EXPECT_EQ(box.size(), 6u);
  EXPECT_EQ(box.extent(), Extent::Finite);
  EXPECT_EQ(build_simplex<Rational>(2).size(), 3u);
  EXPECT_EQ(build_cube<double>(3).size(), 6u);
  std::vector<std::vector<Rational>> zero = {{1, 0}, {0, 0}};
  auto err = error_of([&] { build_finite(zero, std::vector<Rational>{1, 1}); });
  ASSERT_TRUE(err);
  EXPECT_EQ(err->kind(), ErrorKind::Spec);
  EXPECT_EQ(err->constraint_id(), 2);
}

TEST(RandomLp, AcceptedOnlyWhenBoundedNonemptyNondegenerate) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const std::size_t m = n + 2 + seed % 4;
    auto sys = build_random_lp({n, m, seed});
    ASSERT_EQ(sys.size(), m);
    ASSERT_EQ(sys.truncation(), n);
    auto A = rows_of(sys);
    EXPECT_TRUE(support::cone_is_trivial(A)) << "seed " << seed;
    auto vs = support::cramer_vertices(A, bounds_of(sys));
    EXPECT_GE(vs.size(), 2u);
    for (const auto& v : vs) EXPECT_EQ(v.tight.size(), n) << "seed " << seed;
  }
}

TEST(RandomLp, DeterministicPerSeed) {
  auto a = build_random_lp({3, 8, 77});
  auto b = build_random_lp({3, 8, 77});
  auto c = build_random_lp({3, 8, 78});
  ASSERT_EQ(a.size(), b.size());
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a.constraints()[i].functional, b.constraints()[i].functional);
    EXPECT_EQ(a.constraints()[i].bound, b.constraints()[i].bound);
    differs = differs || !(a.constraints()[i].functional == c.constraints()[i].functional);
  }
  EXPECT_TRUE(differs);
  EXPECT_EQ(error_of([] { build_random_lp({3, 3, 0}); })->kind(), ErrorKind::Spec);
}

TEST(Exposing, CubeExamples) {
  auto cube = build_cube<Rational>(3);
  auto k = build_exposing_objective(cube, qpoint({1, 1, 1}), kExact);
  EXPECT_EQ(eval(k, qpoint({1, 1, 1})), 0);
  EXPECT_EQ(eval(k, qpoint({0, 1, 1})), Rational(1, 2));
  EXPECT_EQ(eval(k, qpoint({1, 0, 1})), Rational(1, 4));
  auto k0 = build_exposing_objective(cube, Point<Rational>(3), kExact);
  EXPECT_EQ(eval(k0, Point<Rational>(3)), 0);
  EXPECT_EQ(error_of([&] { build_exposing_objective(cube, qpoint({0, 0, Rational(1, 2)}), kExact); })->kind(),
            ErrorKind::Precondition);
}

TEST(Exposing, UniqueMinimizerOnRandomPolytopes) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto sys = build_random_lp({3, 7, seed + 100});
    auto vs = support::cramer_vertices(rows_of(sys), bounds_of(sys));
    for (const auto& e : vs) {
      auto k = build_exposing_objective(sys, Point<Rational>(e.x), kExact);
      for (const auto& v : vs) {
        Rational val = eval(k, Point<Rational>(v.x));
        if (v.x == e.x) {
          EXPECT_EQ(val, 0);
        } else {
          EXPECT_GT(val, 0);
        }
      }
    }
  }
}

TEST(CircleDirections, EnumerationOrder) {
  auto d = rational_circle_directions(8);
  ASSERT_EQ(d.size(), 8u);
  EXPECT_EQ(d[0], std::make_pair(Rational(3, 5), Rational(4, 5)));
  EXPECT_EQ(d[1], std::make_pair(Rational(-3, 5), Rational(4, 5)));
  EXPECT_EQ(d[2], std::make_pair(Rational(4, 5), Rational(3, 5)));
  EXPECT_EQ(d[3], std::make_pair(Rational(-4, 5), Rational(3, 5)));
  EXPECT_EQ(d[4], std::make_pair(Rational(5, 13), Rational(12, 13)));
  EXPECT_EQ(d[6], std::make_pair(Rational(12, 13), Rational(5, 13)));
  for (const auto& [r, q] : rational_circle_directions(300)) EXPECT_EQ(r * r + q * q, 1);
}

TEST(DiscSection, MembershipExamples) {
  for (std::size_t n : {3, 7, 50}) {
    DiscSection disc({n});
    EXPECT_TRUE(disc.accepts(0.0, 0.0));
    EXPECT_TRUE(disc.accepts(0.5, 0.5));
    EXPECT_TRUE(disc.accepts(Rational(1, 2), Rational(1, 2)));
  }
  // 1.2 * r <= 1 needs r <= 5/6; the first direction with |r| > 5/6 is 12/13 at position 7.
  EXPECT_TRUE(DiscSection({6}).accepts(1.2, 0.0));
  EXPECT_FALSE(DiscSection({7}).accepts(1.2, 0.0));
  EXPECT_FALSE(DiscSection({7}).accepts(Rational(6, 5), Rational(0)));
  EXPECT_EQ(error_of([] { DiscSection({2}); })->kind(), ErrorKind::Spec);
}

TEST(DiscSection, LiftAgreesWithRaisedSystem) {
  DiscSection disc({40});
  auto sys = disc.raised_system();
  const Tolerances<Rational> tol = kExact;
  for (int a = -12; a <= 12; a += 3) {
    for (int b = -12; b <= 12; b += 4) {
      Rational alpha(a, 10), beta(b, 10);
      Point<Rational> p = disc.lift(alpha, beta);
      const bool feasible = !most_violated(sys, p, tol).has_value();
      EXPECT_EQ(feasible, disc.accepts(alpha, beta)) << a << "," << b;
    }
  }
}

TEST(DiscSection, RadialExtentBetweenOneAndCircumscribed) {
  DiscSection disc({24});
  for (int k = 0; k < 360; ++k) {
    double r = disc.radial_extent(k * 3.14159265358979323846 / 180.0);
    EXPECT_GE(r, 1.0 - 1e-12);
    EXPECT_TRUE(disc.accepts(0.999 * r * std::cos(k * 3.14159265358979323846 / 180.0),
                             0.999 * r * std::sin(k * 3.14159265358979323846 / 180.0)));
  }
}
