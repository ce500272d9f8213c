#include "gsimplex/simplex.hpp"

#include <algorithm>

namespace gsimplex {

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::Optimal: return "Optimal";
    case StopReason::GammaTol: return "GammaTol";
    case StopReason::IterLimit: return "IterLimit";
  }
  return "Unknown";
}

template <class T>
PivotDecision<T> gamma(const ConstraintSystem<T>& sys, const Objective<T>& obj, const Point<T>& p,
                       NormPolicy policy, const Tolerances<T>& tol) {
  PivotDecision<T> decision;
  decision.edges = adjacent_extreme_points(sys, p, policy, &obj, tol);
  std::optional<std::size_t> best;
  T best_rate(0);
  for (std::size_t i = 0; i < decision.edges.size(); ++i) {
    T rate = decision.edges[i].rate();
    // Edges arrive in canonical leaving id order, so strict < keeps the first on ties.
    if (!best || rate < best_rate) {
      best = i;
      best_rate = rate;
    }
  }
  if (!best) return decision;
  decision.gamma = best_rate;
  for (const auto& e : decision.edges) {
    if (e.rate() - best_rate <= tol.opt) ++decision.tie_count;
  }
  decision.steepest = decision.edges[*best];
  if (best_rate < -tol.opt) decision.chosen = decision.edges[*best];
  return decision;
}

template <class T>
SimplexTrace<T> simplex_run(const ConstraintSystem<T>& sys, const Objective<T>& obj, const Point<T>& p0,
                            NormPolicy policy, const Limits<T>& limits) {
  limits.tol.validate();
  if (!is_extreme(sys, p0, limits.tol)) {
    throw Error(ErrorKind::Precondition, "start point is not an extreme point");
  }
  SimplexTrace<T> trace;
  trace.truncation = sys.truncation();
  trace.policy = policy;
  Point<T> p = p0;
  std::size_t small_streak = 0;
  for (std::size_t n = 0;; ++n) {
    PivotDecision<T> decision;
    try {
      decision = gamma(sys, obj, p, policy, limits.tol);
    } catch (const Error& err) {
      throw err.with_iteration(n);
    }
    trace.iterates.push_back(p);
    trace.values.push_back(eval(obj, p));
    trace.gammas.push_back(decision.gamma);
    if (obj.tail_bound) {
      T nu(0);
      bool first = true;
      for (const auto& e : decision.edges) {
        if (first || e.length < nu) nu = e.length;
        first = false;
      }
      trace.tail_rate_floors.push_back(first ? decision.gamma : T(decision.gamma - *obj.tail_bound / nu));
    }

    const bool negative = decision.gamma < T(0);
    const bool within_tol = decision.gamma >= -limits.tol.opt;
    std::optional<Edge<T>> next = decision.chosen;
    if (!negative) {
      trace.stop = StopReason::Optimal;
      break;
    }
    if (within_tol) {
      if (sys.extent() == Extent::Finite) {
        trace.stop = StopReason::Optimal;
        break;
      }
      if (++small_streak >= limits.gamma_window) {
        trace.stop = StopReason::GammaTol;
        break;
      }
      next = decision.steepest;
    } else {
      small_streak = 0;
    }
    if (trace.pivots.size() >= limits.max_iter) {
      trace.stop = StopReason::IterLimit;
      break;
    }
    trace.pivots.push_back({next->leaving_id, next->entering_id});
    p = next->adjacent;
  }
  return trace;
}

template <class T>
OptimalityCertificate<T> certify_optimal(const ConstraintSystem<T>& sys, const Objective<T>& obj,
                                         const Point<T>& p, const Tolerances<T>& tol) {
  std::vector<Edge<T>> edges = adjacent_extreme_points(sys, p, NormPolicy::UnitEdge, &obj, tol);
  OptimalityCertificate<T> cert;
  cert.optimal = true;
  for (auto& e : edges) {
    if (*e.cost < -tol.opt) {
      cert.optimal = false;
      if (!cert.witness || *e.cost < *cert.witness->cost) cert.witness = std::move(e);
    }
  }
  return cert;
}

#define GSIMPLEX_INSTANTIATE_SIMPLEX(T)                                                          \
  template PivotDecision<T> gamma(const ConstraintSystem<T>&, const Objective<T>&,              \
                                  const Point<T>&, NormPolicy, const Tolerances<T>&);           \
  template SimplexTrace<T> simplex_run(const ConstraintSystem<T>&, const Objective<T>&,         \
                                       const Point<T>&, NormPolicy, const Limits<T>&);          \
  template OptimalityCertificate<T> certify_optimal(const ConstraintSystem<T>&,                 \
                                                    const Objective<T>&, const Point<T>&,       \
                                                    const Tolerances<T>&);

GSIMPLEX_INSTANTIATE_SIMPLEX(double)
GSIMPLEX_INSTANTIATE_SIMPLEX(Rational)

}  // namespace gsimplex
