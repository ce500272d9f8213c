#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "gsimplex/core.hpp"

namespace gsimplex {

/// delta_j = ratio^j.
struct GeometricWeights {
  Rational ratio;
};

/// delta_j given explicitly for j = 1..N.
struct ExplicitWeights {
  std::vector<Rational> values;
};

using WeightRule = std::variant<GeometricWeights, ExplicitWeights>;

struct HilbertCubeSpec {
  WeightRule delta_rule = GeometricWeights{Rational(1, 2)};
  std::size_t truncation = 1;
};

/// Weights delta_1..delta_N produced by the rule. Throws Spec unless all lie in (0, 1).
std::vector<Rational> hilbert_weights(const HilbertCubeSpec& spec);

/// Product of unit intervals in coordinate-normalized form: id j is x_j <= 1,
/// id -j is -x_j <= 0, with the weights attached for the ambient norm.
template <class T>
ConstraintSystem<T> build_hilbert_cube(const HilbertCubeSpec& spec);

/// c(x) = sum_j delta_j^2 h_j x_j, the functional represented by h in the
/// weighted inner product. With geometric weights and |h_j| <= h_sup the
/// tail beyond N is bounded by h_sup * delta^(2N) * delta^2 / (1 - delta^2),
/// which is attached as the objective's tail bound.
template <class T>
Objective<T> hilbert_cube_objective(const HilbertCubeSpec& spec, const std::function<Rational(std::size_t)>& h,
                                    const Rational& h_sup);

/// sup|h| * delta^(2K) * delta^2 / (1 - delta^2): bound on sum_{k > K} delta_k^2 |h_k|.
Rational geometric_cost_tail_bound(const Rational& delta, std::size_t K, const Rational& h_sup);

/// Finite H-representation with ids 1..m and unit weights.
template <class T>
ConstraintSystem<T> build_finite(const std::vector<std::vector<T>>& rows, const std::vector<T>& bounds);

/// [0,1]^n with the same id scheme as the Hilbert cube, but Extent::Finite.
template <class T>
ConstraintSystem<T> build_cube(std::size_t n);

/// {x >= 0, sum x <= 1}: ids -j for x_j >= 0 and id 1 for the sum.
template <class T>
ConstraintSystem<T> build_simplex(std::size_t n);

struct RandomLpSpec {
  std::size_t dimension = 3;
  std::size_t constraints = 8;
  std::uint64_t seed = 0;
  int coefficient_range = 5;  // entries drawn from [-range, range]
  int max_bound = 10;         // bounds drawn from [1, max_bound]
  std::size_t max_attempts = 10000;
};

/// Seeded random bounded, nonempty, vertex-nondegenerate system with small
/// integer data. Draws are retried until the oracle confirms all three.
ConstraintSystem<Rational> build_random_lp(const RandomLpSpec& spec);

/// Seeded random integer objective for random instances.
Objective<Rational> random_objective(std::size_t dimension, std::uint64_t seed, int range = 5);

/// K_e(x) = sum_{i in A(e)} 2^{-rank(i)} s_i(x), rank = position in A(e) in canonical id order.
template <class T>
Objective<T> build_exposing_objective(const ConstraintSystem<T>& sys, const Point<T>& e,
                                      const Tolerances<T>& tol);

struct DiscSectionSpec {
  std::size_t num_directions = 3;
};

/// Two-dimensional section of the Hilbert cube through the centre point along
/// u_i = r_i / 2, v_i = q_i / 2, where (r_i, q_i) are rational points on the
/// unit circle. It accepts (a, b) iff |r_i a + q_i b| <= 1 for every direction.
class DiscSection {
 public:
  explicit DiscSection(const DiscSectionSpec& spec);

  const std::vector<std::pair<Rational, Rational>>& directions() const noexcept { return directions_; }
  std::size_t size() const noexcept { return directions_.size(); }

  bool accepts(double alpha, double beta) const;
  bool accepts(const Rational& alpha, const Rational& beta) const;

  /// Largest accepted radius along the ray at the given angle.
  double radial_extent(double angle) const;

  /// Cube point p + alpha u + beta v in num_directions coordinates.
  Point<Rational> lift(const Rational& alpha, const Rational& beta) const;
  /// Truncated Hilbert cube in num_directions coordinates hosting the lifted points.
  ConstraintSystem<Rational> raised_system() const;

 private:
  std::vector<std::pair<Rational, Rational>> directions_;
  std::vector<std::pair<double, double>> directions_f_;
};

/// Rational points on the unit circle from primitive Pythagorean triples:
/// m > n >= 1, gcd(m, n) = 1, m - n odd, ascending m then n; each triple
/// (a, b) contributes (a, b), (-a, b), (b, a), (-b, a).
std::vector<std::pair<Rational, Rational>> rational_circle_directions(std::size_t count);

}  // namespace gsimplex
