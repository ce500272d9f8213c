#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gsimplex/error.hpp"
#include "gsimplex/scalar.hpp"

namespace gsimplex {

/// 1-based coordinate index. Coordinates beyond the truncation are implicitly zero.
using CoordIndex = std::size_t;

/// Sparse coordinate form of a linear functional, x -> sum_j a_j x_j.
/// Entries are kept sorted by index with explicit zeros dropped.
template <class T>
class Coeffs {
 public:
  using Entry = std::pair<CoordIndex, T>;

  explicit Coeffs(std::size_t truncation = 0) : truncation_(truncation) {}
  Coeffs(std::size_t truncation, std::vector<Entry> entries);

  static Coeffs dense(std::span<const T> values);

  std::size_t truncation() const noexcept { return truncation_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }

  /// Coefficient of coordinate j (1-based); zero when absent.
  T operator[](CoordIndex j) const;
  std::vector<T> to_dense() const;

  friend bool operator==(const Coeffs&, const Coeffs&) = default;

 private:
  std::size_t truncation_;
  std::vector<Entry> entries_;
};

template <class T>
struct Constraint {
  ConstraintId id;
  Coeffs<T> functional;
  T bound;
};

/// Dense coordinate sequence up to the truncation level.
template <class T>
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t n) : coords_(n, T(0)) {}
  explicit Point(std::vector<T> coords) : coords_(std::move(coords)) {}

  std::size_t size() const noexcept { return coords_.size(); }
  // 0-based access; coordinate j of the model is operator[](j - 1).
  const T& operator[](std::size_t i) const { return coords_[i]; }
  T& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<T>& coords() const noexcept { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<T> coords_;
};

template <class T>
Point<T> operator+(const Point<T>& a, const Point<T>& b);
template <class T>
Point<T> operator-(const Point<T>& a, const Point<T>& b);
template <class T>
Point<T> operator*(const T& s, const Point<T>& a);
/// p + s * d for a sparse direction d.
template <class T>
Point<T> axpy(const Point<T>& p, const T& s, const Coeffs<T>& d);

/// Whether the system models a genuinely finite polyhedron or a truncation
/// of an infinite-dimensional one (which changes what audits may claim).
enum class Extent { Finite, Truncated };

template <class T>
class ConstraintSystem {
 public:
  ConstraintSystem(std::vector<Constraint<T>> constraints, std::vector<T> weights,
                   Extent extent = Extent::Finite);

  std::size_t truncation() const noexcept { return weights_.size(); }
  std::size_t size() const noexcept { return constraints_.size(); }
  Extent extent() const noexcept { return extent_; }
  const std::vector<Constraint<T>>& constraints() const noexcept { return constraints_; }
  const std::vector<T>& weights() const noexcept { return weights_; }

  bool contains(ConstraintId id) const;
  const Constraint<T>& constraint(ConstraintId id) const;

 private:
  std::vector<Constraint<T>> constraints_;
  std::vector<T> weights_;
  Extent extent_;
  std::vector<std::pair<ConstraintId, std::size_t>> by_id_;
};

/// Affine objective c(x) + constant. tail_bound, when set, bounds the
/// neglected sum over edges beyond the truncation.
template <class T>
struct Objective {
  Coeffs<T> linear;
  T constant{0};
  std::optional<T> tail_bound;

  Objective() = default;
  explicit Objective(Coeffs<T> lin, T c = T(0), std::optional<T> tail = std::nullopt);
};

template <class T>
struct Tolerances {
  T active;
  T zero;
  T opt;

  /// 1e-9 / 1e-10 / 1e-9 in floating point, all zero in exact arithmetic.
  static Tolerances defaults();
  void validate() const;
};

template <class T>
T eval(const Coeffs<T>& f, const Point<T>& x);
template <class T>
T eval(const Objective<T>& f, const Point<T>& x);
/// Sparse-times-sparse evaluation, used on edge directions.
template <class T>
T eval(const Coeffs<T>& f, const Coeffs<T>& d);

template <class T>
T slack(const ConstraintSystem<T>& sys, ConstraintId id, const Point<T>& x);

/// Tight constraints at x in canonical id order (see id_before). Throws Infeasible (carrying
/// the most violated id) when some slack is below -tol.active.
template <class T>
std::vector<ConstraintId> active_set(const ConstraintSystem<T>& sys, const Point<T>& x,
                                     const Tolerances<T>& tol);

/// Most violated constraint, if any slack is below -tol.active.
template <class T>
std::optional<ConstraintId> most_violated(const ConstraintSystem<T>& sys, const Point<T>& x,
                                          const Tolerances<T>& tol);

template <class T>
T norm_sq_X(const ConstraintSystem<T>& sys, const Point<T>& x);
template <class T>
T norm_X(const ConstraintSystem<T>& sys, const Point<T>& x);
template <class T>
T norm_X(const ConstraintSystem<T>& sys, const Coeffs<T>& d);

template <class U, class T>
Coeffs<U> convert(const Coeffs<T>& c);
template <class U, class T>
Point<U> convert(const Point<T>& p);
template <class U, class T>
ConstraintSystem<U> convert(const ConstraintSystem<T>& sys);
template <class U, class T>
Objective<U> convert(const Objective<T>& obj);

}  // namespace gsimplex
