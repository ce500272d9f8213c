#include "gsimplex/geometry.hpp"

#include <algorithm>
#include <string>

#include "linalg.hpp"

namespace gsimplex {

std::string_view to_string(NormPolicy policy) {
  return policy == NormPolicy::UnitEdge ? "unit-edge" : "ambient";
}

NormPolicy parse_norm_policy(std::string_view text) {
  if (text == "unit-edge" || text == "UnitEdge" || text == "unit") return NormPolicy::UnitEdge;
  if (text == "ambient" || text == "Ambient") return NormPolicy::Ambient;
  throw Error(ErrorKind::Parse, "unknown norm policy '" + std::string(text) + "'");
}

template <class T>
T Edge<T>::rate() const {
  if (!cost) throw Error(ErrorKind::Precondition, "edge has no cost attached", leaving_id);
  return *cost / length;
}

namespace detail {

template <class T>
DenseRows<T> rows_of(const ConstraintSystem<T>& sys, const std::vector<ConstraintId>& ids,
                     std::optional<ConstraintId> skip = std::nullopt) {
  DenseRows<T> rows;
  rows.reserve(ids.size());
  for (ConstraintId id : ids) {
    if (skip && id == *skip) continue;
    rows.push_back(sys.constraint(id).functional.to_dense());
  }
  return rows;
}

template <class T>
std::size_t active_rank(const ConstraintSystem<T>& sys, const std::vector<ConstraintId>& active,
                        const Tolerances<T>& tol) {
  return rank(rows_of(sys, active), sys.truncation(), tol.zero);
}

template <class T>
Coeffs<T> edge_direction(const ConstraintSystem<T>& sys, const std::vector<ConstraintId>& active,
                         ConstraintId leaving_id, const Tolerances<T>& tol) {
  const std::size_t n = sys.truncation();
  Kernel<T> ker = kernel(rows_of(sys, active, leaving_id), n, tol.zero);
  if (ker.basis.size() != 1) {
    throw Error(ErrorKind::Degenerate,
                "edge line has null-space dimension " + std::to_string(ker.basis.size()) +
                    " instead of 1",
                leaving_id);
  }
  std::vector<T> d = std::move(ker.basis.front());
  T max_abs(0);
  for (const auto& v : d) max_abs = std::max<T>(max_abs, abs_value(v));
  if constexpr (!ScalarTraits<T>::exact) {
    for (auto& v : d) {
      if (abs_value(v) <= tol.zero * max_abs) v = T(0);
    }
  }
  Coeffs<T> dir = Coeffs<T>::dense(std::span<const T>(d));
  T along = eval(sys.constraint(leaving_id).functional, dir);
  if (abs_value(along) <= tol.zero * max_abs) {
    throw Error(ErrorKind::Degenerate, "edge line lies inside the leaving hyperplane", leaving_id);
  }
  T scale = ScalarTraits<T>::exact ? max_abs : norm_X(sys, dir);
  if (along > T(0)) scale = -scale;
  for (auto& v : d) v /= scale;
  return Coeffs<T>::dense(std::span<const T>(d));
}

template <class T>
RatioStep<T> ratio_step(const ConstraintSystem<T>& sys, const Point<T>& p, const Coeffs<T>& d,
                        const Tolerances<T>& tol) {
  std::optional<ConstraintId> best_id;
  T best(0);
  for (const auto& c : sys.constraints()) {
    T s = c.bound - eval(c.functional, p);
    if (abs_value(s) <= tol.active) continue;
    T rate = eval(c.functional, d);
    if (!(rate > tol.zero)) continue;
    T ratio = s / rate;
    if (!best_id) {
      best_id = c.id;
      best = ratio;
      continue;
    }
    T eps(0);
    if constexpr (!ScalarTraits<T>::exact) eps = tol.zero * std::max<T>(T(1), abs_value(best));
    if (ratio < best - eps) {
      best_id = c.id;
      best = ratio;
    } else if (abs_value(T(ratio - best)) <= eps && id_before(c.id, *best_id)) {
      best_id = c.id;
      best = std::min<T>(best, ratio);
    }
  }
  if (!best_id) {
    throw Error(ErrorKind::Unbounded, "no constraint blocks the ray; the region is not compact");
  }
  return {best, *best_id, axpy(p, best, d)};
}

}  // namespace detail

template <class T>
bool is_extreme(const ConstraintSystem<T>& sys, const Point<T>& x, const Tolerances<T>& tol) {
  std::vector<ConstraintId> active = active_set(sys, x, tol);
  if (active.size() < sys.truncation()) return false;
  return detail::active_rank(sys, active, tol) == sys.truncation();
}

namespace {

template <class T>
std::vector<ConstraintId> require_extreme(const ConstraintSystem<T>& sys, const Point<T>& p,
                                          const Tolerances<T>& tol) {
  std::vector<ConstraintId> active = active_set(sys, p, tol);
  if (active.size() < sys.truncation() || detail::active_rank(sys, active, tol) != sys.truncation()) {
    throw Error(ErrorKind::Precondition, "point is not an extreme point");
  }
  return active;
}

}  // namespace

template <class T>
Coeffs<T> edge_line(const ConstraintSystem<T>& sys, const Point<T>& p, ConstraintId leaving_id,
                    const Tolerances<T>& tol) {
  std::vector<ConstraintId> active = require_extreme(sys, p, tol);
  if (std::find(active.begin(), active.end(), leaving_id) == active.end()) {
    throw Error(ErrorKind::Precondition, "leaving constraint is not active", leaving_id);
  }
  return detail::edge_direction(sys, active, leaving_id, tol);
}

template <class T>
RatioStep<T> ratio_test(const ConstraintSystem<T>& sys, const Point<T>& p, const Coeffs<T>& d,
                        const Tolerances<T>& tol) {
  if (d.is_zero()) throw Error(ErrorKind::Precondition, "zero direction");
  if (d.truncation() != sys.truncation()) throw Error(ErrorKind::Dimension, "direction truncation mismatch");
  std::vector<ConstraintId> active = active_set(sys, p, tol);
  for (ConstraintId id : active) {
    if (eval(sys.constraint(id).functional, d) > tol.zero) {
      throw Error(ErrorKind::Precondition, "direction leaves an active halfspace", id);
    }
  }
  return detail::ratio_step(sys, p, d, tol);
}

template <class T>
std::vector<Edge<T>> adjacent_extreme_points(const ConstraintSystem<T>& sys, const Point<T>& p,
                                             NormPolicy policy, const Objective<T>* objective,
                                             const Tolerances<T>& tol) {
  std::vector<ConstraintId> active = require_extreme(sys, p, tol);
  std::vector<Edge<T>> edges;
  edges.reserve(active.size());
  for (ConstraintId leaving : active) {
    try {
      Edge<T> e;
      e.anchor = p;
      e.leaving_id = leaving;
      e.direction = detail::edge_direction(sys, active, leaving, tol);
      RatioStep<T> r = detail::ratio_step(sys, p, e.direction, tol);
      e.step = r.step;
      e.entering_id = r.entering_id;
      e.adjacent = std::move(r.adjacent);
      if (policy == NormPolicy::UnitEdge) {
        e.length = T(1);
      } else {
        e.length = norm_X(sys, e.adjacent - e.anchor);
      }
      if (objective != nullptr) {
        // c(q) - c(p) taken along the edge avoids cancellation between two nearby values.
        e.cost = e.step * eval(objective->linear, e.direction);
      }
      edges.push_back(std::move(e));
    } catch (const Error& err) {
      throw err.with_constraint(leaving);
    }
  }
  return edges;
}

template <class T>
T SchauderDecomposition<T>::residual(std::size_t n) const {
  if (n >= residuals_sq.size()) throw Error(ErrorKind::Bounds, "partial sum index out of range");
  return ScalarTraits<T>::sqrt(residuals_sq[n]);
}

template <class T>
SchauderDecomposition<T> schauder_decompose(const ConstraintSystem<T>& sys, const Point<T>& p,
                                            const Point<T>& x, const Tolerances<T>& tol) {
  if (auto bad = most_violated(sys, x, tol)) {
    throw Error(ErrorKind::Infeasible, "decomposition target is infeasible", *bad);
  }
  SchauderDecomposition<T> dec;
  dec.base = p;
  dec.target = x;
  dec.edges = adjacent_extreme_points(sys, p, NormPolicy::UnitEdge, static_cast<const Objective<T>*>(nullptr), tol);
  const Point<T> offset = x - p;
  Point<T> remaining = offset;
  dec.residuals_sq.push_back(norm_sq_X(sys, remaining));
  std::size_t k = 0;
  for (const auto& edge : dec.edges) {
    ++k;
    const auto& phi = sys.constraint(edge.leaving_id).functional;
    const Point<T> basis = edge.adjacent - edge.anchor;
    T denominator = eval(phi, basis);
    if (abs_value(denominator) <= tol.zero) {
      throw Error(ErrorKind::Degenerate, "edge does not move off its leaving hyperplane",
                  edge.leaving_id);
    }
    T theta = eval(phi, offset) / denominator;
    dec.coefficients.push_back({k, edge.leaving_id, theta});
    remaining = remaining - theta * basis;
    dec.residuals_sq.push_back(norm_sq_X(sys, remaining));
  }
  return dec;
}

template <class T>
Point<T> reconstruct(const SchauderDecomposition<T>& dec, std::size_t n) {
  if (n > dec.coefficients.size()) throw Error(ErrorKind::Bounds, "partial sum index out of range");
  Point<T> out = dec.base;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& edge = dec.edges[k];
    out = out + dec.coefficients[k].theta * (edge.adjacent - edge.anchor);
  }
  return out;
}

#define GSIMPLEX_INSTANTIATE_GEOMETRY(T)                                                        \
  template struct Edge<T>;                                                                      \
  template struct SchauderDecomposition<T>;                                                     \
  template bool is_extreme(const ConstraintSystem<T>&, const Point<T>&, const Tolerances<T>&);  \
  template Coeffs<T> edge_line(const ConstraintSystem<T>&, const Point<T>&, ConstraintId,       \
                               const Tolerances<T>&);                                           \
  template RatioStep<T> ratio_test(const ConstraintSystem<T>&, const Point<T>&,                 \
                                   const Coeffs<T>&, const Tolerances<T>&);                     \
  template std::vector<Edge<T>> adjacent_extreme_points(const ConstraintSystem<T>&,             \
                                                        const Point<T>&, NormPolicy,            \
                                                        const Objective<T>*,                    \
                                                        const Tolerances<T>&);                  \
  template SchauderDecomposition<T> schauder_decompose(const ConstraintSystem<T>&,              \
                                                       const Point<T>&, const Point<T>&,        \
                                                       const Tolerances<T>&);                   \
  template Point<T> reconstruct(const SchauderDecomposition<T>&, std::size_t);                  \
  template Coeffs<T> detail::edge_direction(const ConstraintSystem<T>&,                        \
                                            const std::vector<ConstraintId>&, ConstraintId,     \
                                            const Tolerances<T>&);                              \
  template std::size_t detail::active_rank(const ConstraintSystem<T>&,                         \
                                           const std::vector<ConstraintId>&,                    \
                                           const Tolerances<T>&);

GSIMPLEX_INSTANTIATE_GEOMETRY(double)
GSIMPLEX_INSTANTIATE_GEOMETRY(Rational)

}  // namespace gsimplex
