#include "gsimplex/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "gsimplex/geometry.hpp"
#include "gsimplex/oracle.hpp"

namespace gsimplex {

std::vector<Rational> hilbert_weights(const HilbertCubeSpec& spec) {
  if (spec.truncation == 0) throw Error(ErrorKind::Spec, "truncation must be positive");
  std::vector<Rational> w;
  w.reserve(spec.truncation);
  if (const auto* g = std::get_if<GeometricWeights>(&spec.delta_rule)) {
    if (!(g->ratio > 0 && g->ratio < 1)) throw Error(ErrorKind::Spec, "geometric ratio must lie in (0, 1)");
    Rational d = g->ratio;
    for (std::size_t j = 0; j < spec.truncation; ++j) {
      w.push_back(d);
      d *= g->ratio;
    }
  } else {
    const auto& values = std::get<ExplicitWeights>(spec.delta_rule).values;
    if (values.size() != spec.truncation) {
      throw Error(ErrorKind::Spec, "explicit weight list has " + std::to_string(values.size()) +
                                       " entries for truncation " + std::to_string(spec.truncation));
    }
    for (const auto& d : values) {
      if (!(d > 0 && d < 1)) throw Error(ErrorKind::Spec, "weights must lie in (0, 1)");
      w.push_back(d);
    }
  }
  return w;
}

namespace {

template <class T>
std::vector<Constraint<T>> box_constraints(std::size_t n) {
  std::vector<Constraint<T>> cs;
  cs.reserve(2 * n);
  for (std::size_t j = 1; j <= n; ++j) {
    const auto id = static_cast<ConstraintId>(j);
    cs.push_back({id, Coeffs<T>(n, {{j, T(1)}}), T(1)});
    cs.push_back({-id, Coeffs<T>(n, {{j, T(-1)}}), T(0)});
  }
  return cs;
}

}  // namespace

template <class T>
ConstraintSystem<T> build_hilbert_cube(const HilbertCubeSpec& spec) {
  std::vector<Rational> w = hilbert_weights(spec);
  std::vector<T> weights;
  weights.reserve(w.size());
  for (const auto& d : w) weights.push_back(scalar_cast<T>(d));
  return ConstraintSystem<T>(box_constraints<T>(spec.truncation), std::move(weights), Extent::Truncated);
}

Rational geometric_cost_tail_bound(const Rational& delta, std::size_t K, const Rational& h_sup) {
  if (!(delta > 0 && delta < 1)) throw Error(ErrorKind::Spec, "geometric ratio must lie in (0, 1)");
  Rational d2 = delta * delta;
  Rational tail = abs(h_sup) * pow_int(d2, static_cast<int>(K)) * d2 / (1 - d2);
  return tail;
}

template <class T>
Objective<T> hilbert_cube_objective(const HilbertCubeSpec& spec, const std::function<Rational(std::size_t)>& h,
                                    const Rational& h_sup) {
  std::vector<Rational> w = hilbert_weights(spec);
  std::vector<typename Coeffs<T>::Entry> entries;
  for (std::size_t j = 1; j <= spec.truncation; ++j) {
    Rational hj = h(j);
    if (abs(hj) > h_sup) throw Error(ErrorKind::Spec, "h exceeds its stated bound at coordinate " + std::to_string(j));
    entries.emplace_back(j, scalar_cast<T>(Rational(w[j - 1] * w[j - 1] * hj)));
  }
  std::optional<T> tail;
  if (const auto* g = std::get_if<GeometricWeights>(&spec.delta_rule)) {
    tail = scalar_cast<T>(geometric_cost_tail_bound(g->ratio, spec.truncation, h_sup));
  }
  return Objective<T>(Coeffs<T>(spec.truncation, std::move(entries)), T(0), tail);
}

template <class T>
ConstraintSystem<T> build_finite(const std::vector<std::vector<T>>& rows, const std::vector<T>& bounds) {
  if (rows.empty()) throw Error(ErrorKind::Spec, "no constraint rows");
  if (rows.size() != bounds.size()) throw Error(ErrorKind::Spec, "row and bound counts differ");
  const std::size_t n = rows.front().size();
  if (n == 0) throw Error(ErrorKind::Spec, "zero-dimensional rows");
  std::vector<Constraint<T>> cs;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw Error(ErrorKind::Spec, "inconsistent row dimension", static_cast<ConstraintId>(i + 1));
    Coeffs<T> f = Coeffs<T>::dense(std::span<const T>(rows[i]));
    if (f.is_zero()) throw Error(ErrorKind::Spec, "zero constraint row", static_cast<ConstraintId>(i + 1));
    cs.push_back({static_cast<ConstraintId>(i + 1), std::move(f), bounds[i]});
  }
  return ConstraintSystem<T>(std::move(cs), std::vector<T>(n, T(1)), Extent::Finite);
}

template <class T>
ConstraintSystem<T> build_cube(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::Spec, "cube dimension must be positive");
  return ConstraintSystem<T>(box_constraints<T>(n), std::vector<T>(n, T(1)), Extent::Finite);
}

template <class T>
ConstraintSystem<T> build_simplex(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::Spec, "simplex dimension must be positive");
  std::vector<Constraint<T>> cs;
  std::vector<typename Coeffs<T>::Entry> sum;
  for (std::size_t j = 1; j <= n; ++j) {
    cs.push_back({-static_cast<ConstraintId>(j), Coeffs<T>(n, {{j, T(-1)}}), T(0)});
    sum.emplace_back(j, T(1));
  }
  cs.push_back({1, Coeffs<T>(n, std::move(sum)), T(1)});
  return ConstraintSystem<T>(std::move(cs), std::vector<T>(n, T(1)), Extent::Finite);
}

namespace {

int draw_int(std::mt19937_64& engine, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine() % span);
}

}  // namespace

ConstraintSystem<Rational> build_random_lp(const RandomLpSpec& spec) {
  const std::size_t n = spec.dimension;
  const std::size_t m = spec.constraints;
  if (n == 0 || m < n + 1) throw Error(ErrorKind::Spec, "random LP needs m >= n + 1 constraints");
  if (spec.coefficient_range < 1 || spec.max_bound < 1) throw Error(ErrorKind::Spec, "invalid random LP ranges");
  std::mt19937_64 engine(spec.seed);
  const Tolerances<double> ftol = Tolerances<double>::defaults();
  for (std::size_t attempt = 0; attempt < spec.max_attempts; ++attempt) {
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> bounds;
    while (rows.size() < m) {
      std::vector<Rational> row(n);
      bool nonzero = false;
      for (auto& a : row) {
        int v = draw_int(engine, -spec.coefficient_range, spec.coefficient_range);
        nonzero = nonzero || v != 0;
        a = v;
      }
      int b = draw_int(engine, 1, spec.max_bound);
      if (!nonzero) continue;
      rows.push_back(std::move(row));
      bounds.emplace_back(b);
    }
    ConstraintSystem<Rational> sys = build_finite(rows, bounds);
    // Screening runs in floating point; integer data keeps nonzero slacks at
    // vertices far above the tolerance.
    ConstraintSystem<double> screen = convert<double>(sys);
    if (!is_bounded(screen, ftol)) continue;
    VertexSet<double> vs = enumerate_vertices(screen, ftol);
    if (vs.vertices.size() < 2 || has_degenerate_vertex(vs, n)) continue;
    return sys;
  }
  throw Error(ErrorKind::Budget, "no bounded nondegenerate random LP found within the attempt budget");
}

Objective<Rational> random_objective(std::size_t dimension, std::uint64_t seed, int range) {
  std::mt19937_64 engine(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Coeffs<Rational>::Entry> entries;
  while (entries.empty()) {
    for (std::size_t j = 1; j <= dimension; ++j) {
      int v = draw_int(engine, -range, range);
      if (v != 0) entries.emplace_back(j, Rational(v));
    }
  }
  return Objective<Rational>(Coeffs<Rational>(dimension, std::move(entries)));
}

template <class T>
Objective<T> build_exposing_objective(const ConstraintSystem<T>& sys, const Point<T>& e, const Tolerances<T>& tol) {
  if (!is_extreme(sys, e, tol)) throw Error(ErrorKind::Precondition, "exposing functional needs an extreme point");
  std::vector<ConstraintId> active = active_set(sys, e, tol);
  std::vector<T> linear(sys.truncation(), T(0));
  T constant(0);
  T weight(1);
  for (ConstraintId id : active) {
    weight /= T(2);
    const auto& c = sys.constraint(id);
    for (const auto& [j, a] : c.functional.entries()) linear[j - 1] -= weight * a;
    constant += weight * c.bound;
  }
  return Objective<T>(Coeffs<T>::dense(std::span<const T>(linear)), constant);
}

std::vector<std::pair<Rational, Rational>> rational_circle_directions(std::size_t count) {
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(count + 3);
  for (long m = 2; out.size() < count; ++m) {
    for (long n = 1; n < m && out.size() < count; ++n) {
      if (std::gcd(m, n) != 1 || (m - n) % 2 == 0) continue;
      Rational hyp(m * m + n * n);
      Rational a = Rational(m * m - n * n) / hyp;
      Rational b = Rational(2 * m * n) / hyp;
      for (auto dir : {std::pair{a, b}, std::pair{Rational(-a), b}, std::pair{b, a}, std::pair{Rational(-b), a}}) {
        if (out.size() < count) out.push_back(dir);
      }
    }
  }
  return out;
}

DiscSection::DiscSection(const DiscSectionSpec& spec) {
  if (spec.num_directions < 3) throw Error(ErrorKind::Spec, "disc section needs at least 3 directions");
  directions_ = rational_circle_directions(spec.num_directions);
  for (const auto& [r, q] : directions_) {
    if (r * r + q * q != 1) throw Error(ErrorKind::Spec, "generated direction is off the unit circle");
    directions_f_.emplace_back(r.get_d(), q.get_d());
  }
}

bool DiscSection::accepts(double alpha, double beta) const {
  return std::all_of(directions_f_.begin(), directions_f_.end(),
                     [&](const auto& d) { return std::fabs(d.first * alpha + d.second * beta) <= 1.0; });
}

bool DiscSection::accepts(const Rational& alpha, const Rational& beta) const {
  return std::all_of(directions_.begin(), directions_.end(), [&](const auto& d) {
    Rational s = d.first * alpha + d.second * beta;
    return s <= 1 && s >= -1;
  });
}

double DiscSection::radial_extent(double angle) const {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  double worst = 0.0;
  for (const auto& [r, q] : directions_f_) worst = std::max(worst, std::fabs(r * c + q * s));
  return 1.0 / worst;
}

Point<Rational> DiscSection::lift(const Rational& alpha, const Rational& beta) const {
  std::vector<Rational> coords;
  coords.reserve(directions_.size());
  for (const auto& [r, q] : directions_) coords.emplace_back(Rational(1, 2) + alpha * r / 2 + beta * q / 2);
  return Point<Rational>(std::move(coords));
}

ConstraintSystem<Rational> DiscSection::raised_system() const {
  return build_hilbert_cube<Rational>({GeometricWeights{Rational(1, 2)}, directions_.size()});
}

#define GSIMPLEX_INSTANTIATE_INSTANCES(T)                                                            \
  template ConstraintSystem<T> build_hilbert_cube(const HilbertCubeSpec&);                           \
  template Objective<T> hilbert_cube_objective(const HilbertCubeSpec&,                               \
                                               const std::function<Rational(std::size_t)>&,          \
                                               const Rational&);                                     \
  template ConstraintSystem<T> build_finite(const std::vector<std::vector<T>>&, const std::vector<T>&); \
  template ConstraintSystem<T> build_cube(std::size_t);                                              \
  template ConstraintSystem<T> build_simplex(std::size_t);                                           \
  template Objective<T> build_exposing_objective(const ConstraintSystem<T>&, const Point<T>&,        \
                                                 const Tolerances<T>&);

GSIMPLEX_INSTANTIATE_INSTANCES(double)
GSIMPLEX_INSTANTIATE_INSTANCES(Rational)

}  // namespace gsimplex
