#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gsimplex/core.hpp"

namespace gsimplex {

// Brute-force ground truth for finite instances. Deliberately naive: every
// n-subset of constraints is solved directly, with its own elimination code,
// so that it shares no numerical path with the geometry module.

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

template <class T>
struct BruteOptimum {
  T value;
  std::size_t index;
  Point<T> vertex;
};

template <class T>
struct VertexSet {
  std::vector<Point<T>> vertices;
  // Ascending-id active set of each vertex.
  std::vector<std::vector<ConstraintId>> active_sets;
  // Index pairs (i < j) whose active sets differ in exactly one constraint each way.
  std::vector<std::pair<std::size_t, std::size_t>> adjacency;
  std::optional<BruteOptimum<T>> optimum;

  std::vector<std::size_t> neighbors(std::size_t i) const;
  std::optional<std::size_t> find(const Point<T>& p, const T& tol) const;
};

/// All vertices of {x : phi(x) <= b}, in lexicographic order of the first
/// constraint subset producing each. Throws Budget when C(m, n) > budget.
template <class T>
VertexSet<T> enumerate_vertices(const ConstraintSystem<T>& sys, const Tolerances<T>& tol,
                                std::uint64_t budget = kDefaultOracleBudget);

/// Exhaustive minimum of the objective over the vertices; lowest index on ties.
template <class T>
BruteOptimum<T> brute_optimum(const VertexSet<T>& vs, const Objective<T>& obj);

/// Whether the recession cone {d : phi(d) <= 0 for all constraints} is {0}.
template <class T>
bool is_bounded(const ConstraintSystem<T>& sys, const Tolerances<T>& tol,
                std::uint64_t budget = kDefaultOracleBudget);

/// Some vertex has more than n tight constraints.
template <class T>
bool has_degenerate_vertex(const VertexSet<T>& vs, std::size_t dimension);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace gsimplex
