#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "gsimplex/geometry.hpp"

namespace gsimplex {

/// Outcome of steepest-descent edge selection at one extreme point.
template <class T>
struct PivotDecision {
  T gamma{0};
  // Set iff gamma < -tol.opt.
  std::optional<Edge<T>> chosen;
  // Edges whose rate is within tol.opt of gamma.
  std::size_t tie_count = 0;
  // The argmin edge even when it is not a descent edge; absent only without edges.
  std::optional<Edge<T>> steepest;
  std::vector<Edge<T>> edges;
};

/// gamma(p) = min_k (c(q_k) - c(p)) / length_k over the edges out of p.
/// The minimizer first in canonical leaving id order wins exact ties.
template <class T>
PivotDecision<T> gamma(const ConstraintSystem<T>& sys, const Objective<T>& obj, const Point<T>& p,
                       NormPolicy policy, const Tolerances<T>& tol);

enum class StopReason { Optimal, GammaTol, IterLimit };

std::string_view to_string(StopReason reason);

template <class T>
struct Limits {
  std::size_t max_iter = 10000;
  Tolerances<T> tol = Tolerances<T>::defaults();
  // Consecutive iterations with -tol.opt <= gamma < 0 before stopping with GammaTol.
  std::size_t gamma_window = 1;
};

struct Pivot {
  ConstraintId leaving_id;
  ConstraintId entering_id;

  friend bool operator==(const Pivot&, const Pivot&) = default;
};

template <class T>
struct SimplexTrace {
  std::vector<Point<T>> iterates;
  std::vector<T> values;
  // gammas[n] = gamma(p^n); one entry per iterate.
  std::vector<T> gammas;
  // pivots[n] moves p^n to p^{n+1}.
  std::vector<Pivot> pivots;
  StopReason stop = StopReason::IterLimit;
  std::size_t truncation = 0;
  NormPolicy policy = NormPolicy::UnitEdge;
  // With a tail bound on the objective: gamma - tail_bound / nu_n per iterate,
  // a floor on the rate of any edge beyond the truncation.
  std::vector<T> tail_rate_floors;

  std::size_t pivot_count() const noexcept { return pivots.size(); }
};

/// Steepest-descent edge walk from p0 until gamma is no longer negative.
///
/// Stops with Optimal when gamma >= 0 (or >= -tol.opt on a finite system in
/// floating point), with GammaTol when -tol.opt <= gamma < 0 has held for
/// `gamma_window` consecutive iterates on a truncated system, and with
/// IterLimit after max_iter pivots. Errors carry the iteration index.
template <class T>
SimplexTrace<T> simplex_run(const ConstraintSystem<T>& sys, const Objective<T>& obj, const Point<T>& p0,
                            NormPolicy policy, const Limits<T>& limits);

template <class T>
struct OptimalityCertificate {
  bool optimal = false;
  // Most negative edge when not optimal.
  std::optional<Edge<T>> witness;
};

/// Every edge cost c(q_k) - c(p) >= -tol.opt.
template <class T>
OptimalityCertificate<T> certify_optimal(const ConstraintSystem<T>& sys, const Objective<T>& obj,
                                         const Point<T>& p, const Tolerances<T>& tol);

}  // namespace gsimplex
