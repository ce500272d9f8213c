#include "gsimplex/oracle.hpp"

#include <algorithm>
#include <string>

namespace gsimplex {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) may overflow for huge inputs; saturate.
    if (result > UINT64_MAX / (n - k + i)) return UINT64_MAX;
    result = result * (n - k + i) / i;
  }
  return result;
}

namespace {

// Gaussian elimination with partial pivoting on an augmented n x (n+1) system.
template <class T>
std::optional<std::vector<T>> solve_square(std::vector<std::vector<T>> a, const T& tol) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    T best = abs_value(a[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      T v = abs_value(a[r][col]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best <= tol) return std::nullopt;
    std::swap(a[col], a[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == T(0)) continue;
      T f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<T> x(n, T(0));
  for (std::size_t i = n; i-- > 0;) {
    T s = a[i][n];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

template <class T>
bool same_point(const Point<T>& a, const Point<T>& b, const T& tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (abs_value(T(a[i] - b[i])) > tol) return false;
  }
  return true;
}

template <class T>
T dedup_tolerance() {
  if constexpr (ScalarTraits<T>::exact) {
    return T(0);
  } else {
    return T(1e-8);
  }
}

template <class T>
T singular_tolerance(const Tolerances<T>& tol) {
  if constexpr (ScalarTraits<T>::exact) {
    return T(0);
  } else {
    return tol.zero;
  }
}

std::size_t symmetric_difference(const std::vector<ConstraintId>& a, const std::vector<ConstraintId>& b) {
  std::vector<ConstraintId> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out.size();
}

}  // namespace

template <class T>
std::vector<std::size_t> VertexSet<T>::neighbors(std::size_t i) const {
  std::vector<std::size_t> out;
  for (const auto& [a, b] : adjacency) {
    if (a == i) out.push_back(b);
    if (b == i) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class T>
std::optional<std::size_t> VertexSet<T>::find(const Point<T>& p, const T& tol) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].size() == p.size() && same_point(vertices[i], p, tol)) return i;
  }
  return std::nullopt;
}

template <class T>
VertexSet<T> enumerate_vertices(const ConstraintSystem<T>& sys, const Tolerances<T>& tol,
                                std::uint64_t budget) {
  const std::size_t n = sys.truncation();
  const std::size_t m = sys.size();
  const std::uint64_t subsets = binomial(m, n);
  if (subsets > budget) {
    throw Error(ErrorKind::Budget, "C(" + std::to_string(m) + ", " + std::to_string(n) + ") = " +
                                       std::to_string(subsets) + " subsets exceeds the budget of " +
                                       std::to_string(budget));
  }
  VertexSet<T> vs;
  if (m < n) return vs;
  std::vector<std::vector<T>> dense;
  dense.reserve(m);
  for (const auto& c : sys.constraints()) dense.push_back(c.functional.to_dense());

  const T singular = singular_tolerance(tol);
  const T dedup = dedup_tolerance<T>();
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    std::vector<std::vector<T>> a(n, std::vector<T>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) a[r][c] = dense[pick[r]][c];
      a[r][n] = sys.constraints()[pick[r]].bound;
    }
    if (auto x = solve_square(std::move(a), singular)) {
      Point<T> v(std::move(*x));
      bool feasible = true;
      for (const auto& c : sys.constraints()) {
        if (c.bound - eval(c.functional, v) < -tol.active) {
          feasible = false;
          break;
        }
      }
      if (feasible && !vs.find(v, dedup)) {
        std::vector<ConstraintId> active;
        for (const auto& c : sys.constraints()) {
          if (abs_value(T(c.bound - eval(c.functional, v))) <= tol.active) active.push_back(c.id);
        }
        std::sort(active.begin(), active.end());
        vs.vertices.push_back(std::move(v));
        vs.active_sets.push_back(std::move(active));
      }
    }
    // Next n-subset in lexicographic order.
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == m - n + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  for (std::size_t i = 0; i < vs.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.vertices.size(); ++j) {
      if (symmetric_difference(vs.active_sets[i], vs.active_sets[j]) == 2) vs.adjacency.emplace_back(i, j);
    }
  }
  return vs;
}

template <class T>
BruteOptimum<T> brute_optimum(const VertexSet<T>& vs, const Objective<T>& obj) {
  if (vs.vertices.empty()) throw Error(ErrorKind::Empty, "vertex set is empty");
  std::size_t best = 0;
  T best_value = eval(obj, vs.vertices[0]);
  for (std::size_t i = 1; i < vs.vertices.size(); ++i) {
    T v = eval(obj, vs.vertices[i]);
    if (v < best_value) {
      best = i;
      best_value = v;
    }
  }
  return {best_value, best, vs.vertices[best]};
}

template <class T>
bool is_bounded(const ConstraintSystem<T>& sys, const Tolerances<T>& tol, std::uint64_t budget) {
  // The cone {phi(d) <= 0} clipped to the box |d_j| <= 1 is a polytope whose
  // only vertex is the origin exactly when the cone is trivial.
  const std::size_t n = sys.truncation();
  std::vector<Constraint<T>> cone;
  ConstraintId next = 1;
  for (const auto& c : sys.constraints()) cone.push_back({next++, c.functional, T(0)});
  for (std::size_t j = 1; j <= n; ++j) {
    cone.push_back({next++, Coeffs<T>(n, {{j, T(1)}}), T(1)});
    cone.push_back({next++, Coeffs<T>(n, {{j, T(-1)}}), T(1)});
  }
  ConstraintSystem<T> clipped(std::move(cone), std::vector<T>(n, T(1)));
  VertexSet<T> vs = enumerate_vertices(clipped, tol, budget);
  const T zero_tol = dedup_tolerance<T>();
  for (const auto& v : vs.vertices) {
    for (std::size_t i = 0; i < n; ++i) {
      if (abs_value(v[i]) > zero_tol) return false;
    }
  }
  return true;
}

template <class T>
bool has_degenerate_vertex(const VertexSet<T>& vs, std::size_t dimension) {
  return std::any_of(vs.active_sets.begin(), vs.active_sets.end(),
                     [dimension](const auto& a) { return a.size() > dimension; });
}

#define GSIMPLEX_INSTANTIATE_ORACLE(T)                                                          \
  template struct VertexSet<T>;                                                                 \
  template VertexSet<T> enumerate_vertices(const ConstraintSystem<T>&, const Tolerances<T>&,    \
                                           std::uint64_t);                                      \
  template BruteOptimum<T> brute_optimum(const VertexSet<T>&, const Objective<T>&);             \
  template bool is_bounded(const ConstraintSystem<T>&, const Tolerances<T>&, std::uint64_t);    \
  template bool has_degenerate_vertex(const VertexSet<T>&, std::size_t);

GSIMPLEX_INSTANTIATE_ORACLE(double)
GSIMPLEX_INSTANTIATE_ORACLE(Rational)

}  // namespace gsimplex
