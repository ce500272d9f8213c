#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "gsimplex/core.hpp"

namespace gsimplex {

/// How edge lengths are measured. UnitEdge gives every edge length 1;
/// Ambient measures ||q - p|| in the system's weighted norm.
enum class NormPolicy { UnitEdge, Ambient };

std::string_view to_string(NormPolicy policy);
NormPolicy parse_norm_policy(std::string_view text);

/// An edge out of an extreme point: drop `leaving_id` from the active set,
/// walk along `direction` until `entering_id` blocks at `adjacent`.
template <class T>
struct Edge {
  Point<T> anchor;
  ConstraintId leaving_id{};
  Coeffs<T> direction;
  T step{0};
  Point<T> adjacent;
  ConstraintId entering_id{};
  T length{0};
  std::optional<T> cost;

  /// cost / length. Requires an attached objective.
  T rate() const;
};

template <class T>
struct RatioStep {
  T step;
  ConstraintId entering_id;
  Point<T> adjacent;
};

/// True iff the active rows at x have rank equal to the truncation, i.e. the
/// tight hyperplanes meet only at x.
template <class T>
bool is_extreme(const ConstraintSystem<T>& sys, const Point<T>& x, const Tolerances<T>& tol);

/// Direction of the line cut out by all active constraints except `leaving_id`,
/// oriented into the leaving halfspace. Unit ambient norm in floating point;
/// unit max-norm in exact arithmetic, so the direction stays rational.
template <class T>
Coeffs<T> edge_line(const ConstraintSystem<T>& sys, const Point<T>& p, ConstraintId leaving_id,
                    const Tolerances<T>& tol);

/// First blocking constraint along p + t d, t > 0. Ties go to the id first in canonical order.
template <class T>
RatioStep<T> ratio_test(const ConstraintSystem<T>& sys, const Point<T>& p, const Coeffs<T>& d,
                        const Tolerances<T>& tol);

/// One edge per active constraint at p, in canonical leaving id order.
/// `objective` may be null; when set each edge carries c(q) - c(p).
template <class T>
std::vector<Edge<T>> adjacent_extreme_points(const ConstraintSystem<T>& sys, const Point<T>& p,
                                             NormPolicy policy, const Objective<T>* objective,
                                             const Tolerances<T>& tol);

template <class T>
struct SchauderTerm {
  std::size_t k;     // 1-based position of the constraint within A(p), canonical id order
  ConstraintId id;
  T theta;
};

/// Expansion of x - p along the edges q_k(p) - p out of an extreme point p.
template <class T>
struct SchauderDecomposition {
  Point<T> base;
  Point<T> target;
  std::vector<SchauderTerm<T>> coefficients;
  std::vector<Edge<T>> edges;
  // residuals_sq[n] = ||x - x^n||_X^2 for the partial sum over the first n edges.
  std::vector<T> residuals_sq;

  T residual(std::size_t n) const;
};

template <class T>
SchauderDecomposition<T> schauder_decompose(const ConstraintSystem<T>& sys, const Point<T>& p,
                                            const Point<T>& x, const Tolerances<T>& tol);

/// p + sum_{k <= n} theta_k (q_k - p).
template <class T>
Point<T> reconstruct(const SchauderDecomposition<T>& dec, std::size_t n);

namespace detail {

// Versions without the extreme-point precondition check, for callers that
// already hold the active set.
template <class T>
Coeffs<T> edge_direction(const ConstraintSystem<T>& sys, const std::vector<ConstraintId>& active,
                         ConstraintId leaving_id, const Tolerances<T>& tol);

template <class T>
std::size_t active_rank(const ConstraintSystem<T>& sys, const std::vector<ConstraintId>& active,
                        const Tolerances<T>& tol);

}  // namespace detail

}  // namespace gsimplex
