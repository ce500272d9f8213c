#include "gsimplex/core.hpp"

#include <algorithm>
#include <string>
#include <type_traits>

namespace gsimplex {

template <class T>
Coeffs<T>::Coeffs(std::size_t truncation, std::vector<Entry> entries) : truncation_(truncation) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& [j, a] = entries[i];
    if (j < 1 || j > truncation) {
      throw Error(ErrorKind::Dimension, "coefficient index " + std::to_string(j) +
                                            " outside [1, " + std::to_string(truncation) + "]");
    }
    if (i > 0 && entries[i - 1].first == j) {
      throw Error(ErrorKind::Spec, "duplicate coefficient index " + std::to_string(j));
    }
  }
  for (auto& e : entries) {
    if constexpr (std::is_same_v<T, Rational>) e.second.canonicalize();
    if (e.second != T(0)) entries_.push_back(std::move(e));
  }
}

template <class T>
Coeffs<T> Coeffs<T>::dense(std::span<const T> values) {
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != T(0)) entries.emplace_back(i + 1, values[i]);
  }
  return Coeffs(values.size(), std::move(entries));
}

template <class T>
T Coeffs<T>::operator[](CoordIndex j) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), j,
                             [](const Entry& e, CoordIndex k) { return e.first < k; });
  if (it != entries_.end() && it->first == j) return it->second;
  return T(0);
}

template <class T>
std::vector<T> Coeffs<T>::to_dense() const {
  std::vector<T> out(truncation_, T(0));
  for (const auto& [j, a] : entries_) out[j - 1] = a;
  return out;
}

namespace {

template <class T>
void require_same_size(const Point<T>& a, const Point<T>& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::Dimension, "point sizes differ: " + std::to_string(a.size()) + " vs " +
                                          std::to_string(b.size()));
  }
}

template <class T>
void require_system_size(const ConstraintSystem<T>& sys, std::size_t n) {
  if (n != sys.truncation()) {
    throw Error(ErrorKind::Dimension, "point has " + std::to_string(n) +
                                          " coordinates but the system truncation is " +
                                          std::to_string(sys.truncation()));
  }
}

}  // namespace

template <class T>
Point<T> operator+(const Point<T>& a, const Point<T>& b) {
  require_same_size(a, b);
  std::vector<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return Point<T>(std::move(out));
}

template <class T>
Point<T> operator-(const Point<T>& a, const Point<T>& b) {
  require_same_size(a, b);
  std::vector<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return Point<T>(std::move(out));
}

template <class T>
Point<T> operator*(const T& s, const Point<T>& a) {
  std::vector<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return Point<T>(std::move(out));
}

template <class T>
Point<T> axpy(const Point<T>& p, const T& s, const Coeffs<T>& d) {
  if (d.truncation() > p.size()) {
    throw Error(ErrorKind::Dimension, "direction truncation exceeds point size");
  }
  Point<T> out = p;
  for (const auto& [j, a] : d.entries()) out[j - 1] += s * a;
  return out;
}

template <class T>
ConstraintSystem<T>::ConstraintSystem(std::vector<Constraint<T>> constraints, std::vector<T> weights,
                                      Extent extent)
    : constraints_(std::move(constraints)), weights_(std::move(weights)), extent_(extent) {
  if (weights_.empty()) throw Error(ErrorKind::Spec, "truncation must be positive");
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    if (!(weights_[j] > T(0))) {
      throw Error(ErrorKind::Spec, "weight " + std::to_string(j + 1) + " is not positive");
    }
  }
  by_id_.reserve(constraints_.size());
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    const auto& c = constraints_[i];
    if (c.functional.truncation() != weights_.size()) {
      throw Error(ErrorKind::Dimension, "constraint functional truncation differs from the system's",
                  c.id);
    }
    if (c.functional.is_zero()) throw Error(ErrorKind::Spec, "zero constraint functional", c.id);
    by_id_.emplace_back(c.id, i);
  }
  std::sort(by_id_.begin(), by_id_.end());
  for (std::size_t i = 1; i < by_id_.size(); ++i) {
    if (by_id_[i - 1].first == by_id_[i].first) {
      throw Error(ErrorKind::Spec, "duplicate constraint id", by_id_[i].first);
    }
  }
}

template <class T>
bool ConstraintSystem<T>::contains(ConstraintId id) const {
  return std::binary_search(by_id_.begin(), by_id_.end(), std::pair<ConstraintId, std::size_t>{id, 0},
                            [](const auto& a, const auto& b) { return a.first < b.first; });
}

template <class T>
const Constraint<T>& ConstraintSystem<T>::constraint(ConstraintId id) const {
  auto it = std::lower_bound(by_id_.begin(), by_id_.end(), id,
                             [](const auto& e, ConstraintId k) { return e.first < k; });
  if (it == by_id_.end() || it->first != id) throw Error(ErrorKind::Lookup, "unknown constraint id", id);
  return constraints_[it->second];
}

template <class T>
Objective<T>::Objective(Coeffs<T> lin, T c, std::optional<T> tail)
    : linear(std::move(lin)), constant(std::move(c)), tail_bound(std::move(tail)) {
  if (tail_bound && *tail_bound < T(0)) throw Error(ErrorKind::Spec, "negative tail bound");
}

template <class T>
Tolerances<T> Tolerances<T>::defaults() {
  if constexpr (ScalarTraits<T>::exact) {
    return {T(0), T(0), T(0)};
  } else {
    return {T(1e-9), T(1e-10), T(1e-9)};
  }
}

template <class T>
void Tolerances<T>::validate() const {
  // Exact arithmetic runs with zero thresholds; floating point needs strictly positive ones.
  bool ok = ScalarTraits<T>::exact ? (active >= T(0) && zero >= T(0) && opt >= T(0))
                                   : (active > T(0) && zero > T(0) && opt > T(0));
  if (!ok) throw Error(ErrorKind::Spec, "tolerances must be positive");
}

template <class T>
T eval(const Coeffs<T>& f, const Point<T>& x) {
  if (x.size() < f.truncation()) {
    throw Error(ErrorKind::Dimension, "point truncation " + std::to_string(x.size()) +
                                          " below functional truncation " +
                                          std::to_string(f.truncation()));
  }
  T sum(0);
  for (const auto& [j, a] : f.entries()) sum += a * x[j - 1];
  return sum;
}

template <class T>
T eval(const Objective<T>& f, const Point<T>& x) {
  return eval(f.linear, x) + f.constant;
}

template <class T>
T eval(const Coeffs<T>& f, const Coeffs<T>& d) {
  T sum(0);
  auto a = f.entries().begin();
  auto b = d.entries().begin();
  while (a != f.entries().end() && b != d.entries().end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      sum += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return sum;
}

template <class T>
T slack(const ConstraintSystem<T>& sys, ConstraintId id, const Point<T>& x) {
  require_system_size(sys, x.size());
  const auto& c = sys.constraint(id);
  return c.bound - eval(c.functional, x);
}

template <class T>
std::optional<ConstraintId> most_violated(const ConstraintSystem<T>& sys, const Point<T>& x,
                                          const Tolerances<T>& tol) {
  require_system_size(sys, x.size());
  std::optional<ConstraintId> worst;
  T worst_slack(0);
  for (const auto& c : sys.constraints()) {
    T s = c.bound - eval(c.functional, x);
    if (s < -tol.active && (!worst || s < worst_slack || (s == worst_slack && id_before(c.id, *worst)))) {
      worst = c.id;
      worst_slack = s;
    }
  }
  return worst;
}

template <class T>
std::vector<ConstraintId> active_set(const ConstraintSystem<T>& sys, const Point<T>& x,
                                     const Tolerances<T>& tol) {
  if (auto bad = most_violated(sys, x, tol)) {
    throw Error(ErrorKind::Infeasible, "point violates a constraint", *bad);
  }
  std::vector<ConstraintId> ids;
  for (const auto& c : sys.constraints()) {
    T s = c.bound - eval(c.functional, x);
    if (abs_value(s) <= tol.active) ids.push_back(c.id);
  }
  std::sort(ids.begin(), ids.end(), IdOrder{});
  return ids;
}

template <class T>
T norm_sq_X(const ConstraintSystem<T>& sys, const Point<T>& x) {
  require_system_size(sys, x.size());
  T sum(0);
  for (std::size_t j = 0; j < x.size(); ++j) {
    T term = sys.weights()[j] * x[j];
    sum += term * term;
  }
  return sum;
}

template <class T>
T norm_X(const ConstraintSystem<T>& sys, const Point<T>& x) {
  return ScalarTraits<T>::sqrt(norm_sq_X(sys, x));
}

template <class T>
T norm_X(const ConstraintSystem<T>& sys, const Coeffs<T>& d) {
  if (d.truncation() > sys.truncation()) throw Error(ErrorKind::Dimension, "direction exceeds truncation");
  T sum(0);
  for (const auto& [j, a] : d.entries()) {
    T term = sys.weights()[j - 1] * a;
    sum += term * term;
  }
  return ScalarTraits<T>::sqrt(sum);
}

template <class U, class T>
Coeffs<U> convert(const Coeffs<T>& c) {
  std::vector<typename Coeffs<U>::Entry> entries;
  entries.reserve(c.entries().size());
  for (const auto& [j, a] : c.entries()) entries.emplace_back(j, scalar_cast<U>(a));
  return Coeffs<U>(c.truncation(), std::move(entries));
}

template <class U, class T>
Point<U> convert(const Point<T>& p) {
  std::vector<U> out;
  out.reserve(p.size());
  for (const auto& v : p.coords()) out.push_back(scalar_cast<U>(v));
  return Point<U>(std::move(out));
}

template <class U, class T>
ConstraintSystem<U> convert(const ConstraintSystem<T>& sys) {
  std::vector<Constraint<U>> cs;
  cs.reserve(sys.size());
  for (const auto& c : sys.constraints()) {
    cs.push_back({c.id, convert<U>(c.functional), scalar_cast<U>(c.bound)});
  }
  std::vector<U> w;
  for (const auto& v : sys.weights()) w.push_back(scalar_cast<U>(v));
  return ConstraintSystem<U>(std::move(cs), std::move(w), sys.extent());
}

template <class U, class T>
Objective<U> convert(const Objective<T>& obj) {
  std::optional<U> tail;
  if (obj.tail_bound) tail = scalar_cast<U>(*obj.tail_bound);
  return Objective<U>(convert<U>(obj.linear), scalar_cast<U>(obj.constant), tail);
}

#define GSIMPLEX_INSTANTIATE_CORE(T)                                                          \
  template class Coeffs<T>;                                                                   \
  template class ConstraintSystem<T>;                                                         \
  template struct Objective<T>;                                                               \
  template struct Tolerances<T>;                                                              \
  template Point<T> operator+(const Point<T>&, const Point<T>&);                              \
  template Point<T> operator-(const Point<T>&, const Point<T>&);                              \
  template Point<T> operator*(const T&, const Point<T>&);                                     \
  template Point<T> axpy(const Point<T>&, const T&, const Coeffs<T>&);                        \
  template T eval(const Coeffs<T>&, const Point<T>&);                                         \
  template T eval(const Objective<T>&, const Point<T>&);                                      \
  template T eval(const Coeffs<T>&, const Coeffs<T>&);                                        \
  template T slack(const ConstraintSystem<T>&, ConstraintId, const Point<T>&);                \
  template std::vector<ConstraintId> active_set(const ConstraintSystem<T>&, const Point<T>&,  \
                                                const Tolerances<T>&);                        \
  template std::optional<ConstraintId> most_violated(const ConstraintSystem<T>&,              \
                                                     const Point<T>&, const Tolerances<T>&);  \
  template T norm_sq_X(const ConstraintSystem<T>&, const Point<T>&);                          \
  template T norm_X(const ConstraintSystem<T>&, const Point<T>&);                             \
  template T norm_X(const ConstraintSystem<T>&, const Coeffs<T>&);

GSIMPLEX_INSTANTIATE_CORE(double)
GSIMPLEX_INSTANTIATE_CORE(Rational)

#define GSIMPLEX_INSTANTIATE_CONVERT(U, T)                                   \
  template Coeffs<U> convert<U, T>(const Coeffs<T>&);                       \
  template Point<U> convert<U, T>(const Point<T>&);                         \
  template ConstraintSystem<U> convert<U, T>(const ConstraintSystem<T>&);   \
  template Objective<U> convert<U, T>(const Objective<T>&);

GSIMPLEX_INSTANTIATE_CONVERT(double, Rational)
GSIMPLEX_INSTANTIATE_CONVERT(Rational, double)
GSIMPLEX_INSTANTIATE_CONVERT(double, double)
GSIMPLEX_INSTANTIATE_CONVERT(Rational, Rational)

}  // namespace gsimplex
