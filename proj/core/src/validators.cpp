#include "gsimplex/validators.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "gsimplex/oracle.hpp"

namespace gsimplex {

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Pass: return "pass";
    case VerdictStatus::Fail: return "fail";
    case VerdictStatus::HeuristicPass: return "heuristic-pass";
    case VerdictStatus::NotCheckable: return "not-checkable";
  }
  return "unknown";
}

template <class T>
std::size_t horizon(const Coeffs<T>& f) {
  return f.entries().empty() ? 0 : f.entries().back().first;
}

template <class T>
const Verdict<T>& AuditReport<T>::verdict(std::string_view id) const {
  for (const auto& v : verdicts) {
    if (v.id == id) return v;
  }
  throw Error(ErrorKind::Lookup, "no verdict for " + std::string(id));
}

template <class T>
bool AuditReport<T>::any_failed() const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const auto& v) { return v.status == VerdictStatus::Fail; });
}

namespace {

template <class T>
struct EdgeSummary {
  ConstraintId leaving;
  std::size_t horizon;
  T length;
  std::optional<T> cost;
};

template <class T>
struct SampleSummary {
  Point<T> p;
  bool extreme = false;
  std::optional<Error> failure;
  std::optional<T> min_slack;
  ConstraintId min_slack_id = 0;
  std::optional<T> min_slack_half;
  T max_abs_phi{0};
  ConstraintId max_phi_id = 0;
  T max_abs_phi_half{0};
  std::vector<EdgeSummary<T>> edges;
};

template <class T>
SampleSummary<T> summarize(const ConstraintSystem<T>& sys, const Objective<T>* objective,
                           NormPolicy policy, const Tolerances<T>& tol, Point<T> p,
                           std::size_t half) {
  SampleSummary<T> s;
  s.p = std::move(p);
  try {
    bool have_phi = false;
    for (const auto& c : sys.constraints()) {
      T value = eval(c.functional, s.p);
      T slk = c.bound - value;
      T mag = abs_value(value);
      const bool shallow = horizon(c.functional) <= half;
      if (!have_phi || mag > s.max_abs_phi) {
        s.max_abs_phi = mag;
        s.max_phi_id = c.id;
        have_phi = true;
      }
      if (shallow && mag > s.max_abs_phi_half) s.max_abs_phi_half = mag;
      if (abs_value(slk) <= tol.active) continue;
      if (!s.min_slack || slk < *s.min_slack) {
        s.min_slack = slk;
        s.min_slack_id = c.id;
      }
      if (shallow && (!s.min_slack_half || slk < *s.min_slack_half)) s.min_slack_half = slk;
    }
    s.extreme = is_extreme(sys, s.p, tol);
    if (!s.extreme) return s;
    for (const auto& e : adjacent_extreme_points(sys, s.p, policy, objective, tol)) {
      s.edges.push_back({e.leaving_id, horizon(sys.constraint(e.leaving_id).functional), e.length, e.cost});
    }
  } catch (const Error& err) {
    s.failure = err;
  }
  return s;
}

template <class T>
std::vector<Point<T>> draw_binary_points(std::size_t n, const SampleSpec& spec) {
  std::mt19937_64 engine(spec.seed);
  std::vector<Point<T>> out;
  out.reserve(spec.size);
  for (std::size_t i = 0; i < spec.size; ++i) {
    Point<T> p(n);
    for (std::size_t j = 0; j < n; ++j) p[j] = T(static_cast<long>(engine() >> 63U));
    out.push_back(std::move(p));
  }
  return out;
}

template <class T>
std::vector<SampleSummary<T>> summarize_all(const ConstraintSystem<T>& sys, const Objective<T>* objective,
                                            NormPolicy policy, const Tolerances<T>& tol,
                                            std::vector<Point<T>> points, unsigned threads) {
  const std::size_t half = std::max<std::size_t>(1, sys.truncation() / 2);
  std::vector<SampleSummary<T>> out(points.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      out[i] = summarize(sys, objective, policy, tol, std::move(points[i]), half);
    }
  };
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(points.size())));
  if (threads <= 1) {
    work(0, points.size());
    return out;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (points.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t begin = t * chunk;
    std::size_t end = std::min(points.size(), begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(work, begin, end);
  }
  for (auto& th : pool) th.join();
  return out;
}

template <class T>
Witness<T> point_witness(const Point<T>& p, std::optional<ConstraintId> id,
                         const ConstraintSystem<T>& sys, std::optional<T> value = std::nullopt) {
  Witness<T> w;
  w.point = p;
  w.constraint = id;
  if (id) w.horizon = horizon(sys.constraint(*id).functional);
  w.value = std::move(value);
  return w;
}

template <class T>
Verdict<T> make_verdict(std::string id, std::string tag, VerdictStatus status, std::string detail,
                        std::optional<Witness<T>> witness = std::nullopt) {
  return Verdict<T>{std::move(id), std::move(tag), status, std::move(detail), std::move(witness)};
}

}  // namespace

template <class T>
AuditReport<T> audit(const ConstraintSystem<T>& sys, const Objective<T>* objective, NormPolicy policy,
                     const SampleSpec& sample, const Tolerances<T>& tol) {
  const std::size_t n = sys.truncation();
  AuditReport<T> report;
  report.truncation = n;
  report.policy = policy;
  report.extent = sys.extent();

  std::vector<Point<T>> points;
  if (sample.kind == SampleKind::Exhaustive) {
    VertexSet<T> vs = enumerate_vertices(sys, tol);
    points = vs.vertices;
    report.samples = "exhaustive vertex enumeration (" + std::to_string(points.size()) + " vertices)";
  } else {
    points = draw_binary_points<T>(n, sample);
    report.samples = "random 0/1 points, seed " + std::to_string(sample.seed) + ", " +
                     std::to_string(sample.size) + " drawn";
  }
  if (points.empty()) throw Error(ErrorKind::Sampling, "empty extreme-point sample");

  std::vector<SampleSummary<T>> summaries =
      summarize_all(sys, objective, policy, tol, std::move(points), sample.threads);
  std::vector<const SampleSummary<T>*> usable;
  const SampleSummary<T>* unbounded = nullptr;
  const SampleSummary<T>* degenerate = nullptr;
  for (const auto& s : summaries) {
    if (s.failure) {
      if (s.failure->kind() == ErrorKind::Unbounded && !unbounded) unbounded = &s;
      if (s.failure->kind() != ErrorKind::Unbounded && !degenerate) degenerate = &s;
      continue;
    }
    if (s.extreme) usable.push_back(&s);
  }
  if (usable.empty() && !unbounded && !degenerate) {
    throw Error(ErrorKind::Sampling, "no sampled point is an extreme point");
  }
  report.sample_count = usable.size();
  report.samples += ", " + std::to_string(usable.size()) + " extreme";

  const bool confirmed = sys.extent() == Extent::Finite && sample.kind == SampleKind::Exhaustive;
  const VerdictStatus ok = confirmed ? VerdictStatus::Pass : VerdictStatus::HeuristicPass;
  const bool truncated = sys.extent() == Extent::Truncated;

  // rho, xi
  const SampleSummary<T>* rho_at = nullptr;
  std::optional<T> rho_half;
  const SampleSummary<T>* xi_at = nullptr;
  T xi_half(0);
  for (const auto* s : usable) {
    if (s->min_slack && (!rho_at || *s->min_slack < report.rho)) {
      report.rho = *s->min_slack;
      rho_at = s;
    }
    if (s->min_slack_half && (!rho_half || *s->min_slack_half < *rho_half)) rho_half = s->min_slack_half;
    if (!xi_at || s->max_abs_phi > report.xi) {
      report.xi = s->max_abs_phi;
      xi_at = s;
    }
    xi_half = std::max<T>(xi_half, s->max_abs_phi_half);
  }

  // nu, D
  const SampleSummary<T>* nu_at = nullptr;
  const EdgeSummary<T>* nu_edge = nullptr;
  const SampleSummary<T>* d_at = nullptr;
  const EdgeSummary<T>* d_edge = nullptr;
  std::optional<T> nu_half;
  std::optional<T> d_half;
  const std::size_t half = std::max<std::size_t>(1, n / 2);
  for (const auto* s : usable) {
    for (const auto& e : s->edges) {
      if (!nu_edge || e.length < nu_edge->length) {
        nu_edge = &e;
        nu_at = s;
      }
      if (!d_edge || e.length > d_edge->length) {
        d_edge = &e;
        d_at = s;
      }
      if (e.horizon <= half) {
        if (!nu_half || e.length < *nu_half) nu_half = e.length;
        if (!d_half || e.length > *d_half) d_half = e.length;
      }
    }
  }
  if (nu_edge) report.nu = nu_edge->length;
  if (d_edge) report.D = d_edge->length;

  // Edge-cost tail table.
  std::optional<T> tail_sup;
  if (objective) {
    const T tail = objective->tail_bound.value_or(T(0));
    std::vector<T> tail_beyond(n + 1, T(0));  // sup_p sum_{horizon > K} |cost|
    for (const auto* s : usable) {
      std::vector<T> by_horizon(n + 1, T(0));
      for (const auto& e : s->edges) by_horizon[e.horizon] += abs_value(*e.cost);
      T running(0);
      for (std::size_t K = n + 1; K-- > 0;) {
        tail_beyond[K] = std::max<T>(tail_beyond[K], running);
        running += by_horizon[K];
      }
    }
    for (double eps : {1e-2, 1e-4, 1e-6}) {
      CostTailEntry entry{eps, std::nullopt};
      if (!truncated || objective->tail_bound) {
        for (std::size_t K = 0; K <= n; ++K) {
          if (to_double(T(tail_beyond[K] + tail)) <= eps) {
            entry.K = K;
            break;
          }
        }
      }
      report.cost_tail.push_back(entry);
    }
    tail_sup = tail;
  }

  // A1 compactness
  if (unbounded) {
    report.verdicts.push_back(make_verdict<T>(
        "A1", "compact", VerdictStatus::Fail, "an edge ray out of a sampled point is never blocked",
        point_witness(unbounded->p, unbounded->failure->constraint_id(), sys)));
  } else if (!truncated) {
    bool bounded = false;
    std::string how;
    try {
      bounded = is_bounded(sys, tol);
      how = "recession cone is trivial";
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::Budget) throw;
      bounded = true;
      how = "recession check over budget; sampled edges all bounded";
    }
    if (bounded) {
      report.verdicts.push_back(make_verdict<T>("A1", "compact", confirmed ? VerdictStatus::Pass : VerdictStatus::HeuristicPass,
                                                "non-empty (extreme points found); " + how));
    } else {
      report.verdicts.push_back(make_verdict<T>("A1", "compact", VerdictStatus::Fail,
                                                "recession cone contains a nonzero direction"));
    }
  } else {
    std::optional<std::size_t> open_coord;
    for (std::size_t j = 1; j <= n && !open_coord; ++j) {
      bool up = false;
      bool down = false;
      for (const auto& c : sys.constraints()) {
        T a = c.functional[j];
        up = up || a > T(0);
        down = down || a < T(0);
      }
      if (!up || !down) open_coord = j;
    }
    if (open_coord) {
      Witness<T> w;
      w.horizon = *open_coord;
      report.verdicts.push_back(make_verdict<T>("A1", "compact", VerdictStatus::Fail,
                                                "coordinate " + std::to_string(*open_coord) +
                                                    " is unbounded in one direction",
                                                w));
    } else {
      report.verdicts.push_back(make_verdict<T>(
          "A1", "compact", VerdictStatus::HeuristicPass,
          "every coordinate bounded at the truncation; compactness of the full set is not checkable"));
    }
  }

  // A2 strictly positive slacks
  if (!rho_at) {
    report.verdicts.push_back(make_verdict<T>("A2", "strictly-positive-slacks", VerdictStatus::NotCheckable,
                                              "no inactive constraint at any sampled point"));
  } else if (report.rho <= tol.active || (truncated && rho_half && report.rho < *rho_half)) {
    report.verdicts.push_back(make_verdict<T>(
        "A2", "strictly-positive-slacks", VerdictStatus::Fail,
        truncated ? "smallest inactive slack shrinks with the truncation horizon" : "inactive slack is zero",
        point_witness(rho_at->p, std::optional<ConstraintId>(rho_at->min_slack_id), sys,
                      std::optional<T>(report.rho))));
  } else {
    report.verdicts.push_back(make_verdict<T>("A2", "strictly-positive-slacks", ok,
                                              "rho = " + format_scalar(report.rho) + " > 0"));
  }

  // A3 uniformly bounded functionals over H(p) - p
  if (degenerate) {
    report.verdicts.push_back(make_verdict<T>(
        "A3", "constraints-bounded", VerdictStatus::NotCheckable,
        std::string("edge enumeration failed at a sampled point: ") + degenerate->failure->what(),
        point_witness(degenerate->p, degenerate->failure->constraint_id(), sys)));
  } else {
    report.verdicts.push_back(make_verdict<T>("A3", "constraints-bounded", ok,
                                              "vacuous: H(p) = {p} at every sampled extreme point"));
  }

  // A4 countably many constraints
  report.verdicts.push_back(make_verdict<T>("A4", "countably-many-constraints", VerdictStatus::Pass,
                                            "constraint list is indexed by integers"));

  // A5 partial sums: decompose midpoints of sampled vertices and test that the
  // partial sums settle on the target.
  {
    std::optional<Witness<T>> bad;
    std::string why;
    const std::size_t pairs = std::min(sample.decomposition_pairs, usable.size());
    for (std::size_t i = 0; i < pairs && !bad; ++i) {
      const auto& p = usable[i]->p;
      const auto& a = usable[(i + 1) % usable.size()]->p;
      const auto& b = usable[(i + 2) % usable.size()]->p;
      const T half_weight = T(1) / T(2);
      Point<T> x = half_weight * (a + b);
      try {
        SchauderDecomposition<T> dec = schauder_decompose(sys, p, x, tol);
        T limit = tol.zero * (T(1) + dec.residuals_sq.front());
        for (const auto& term : dec.coefficients) {
          if (term.theta < -tol.zero) {
            bad = point_witness(p, std::optional<ConstraintId>(term.id), sys, std::optional<T>(term.theta));
            why = "negative Schauder coefficient";
            break;
          }
        }
        if (!bad && dec.residuals_sq.back() > limit) {
          bad = point_witness(p, std::nullopt, sys, std::optional<T>(dec.residuals_sq.back()));
          why = "partial sums do not reach the target at the truncation";
        }
      } catch (const Error& err) {
        bad = point_witness(p, err.constraint_id(), sys);
        why = err.what();
      }
    }
    if (bad) {
      report.verdicts.push_back(make_verdict<T>("A5", "partial-sums-compact", VerdictStatus::Fail, why, bad));
    } else if (pairs == 0) {
      report.verdicts.push_back(make_verdict<T>("A5", "partial-sums-compact", VerdictStatus::NotCheckable,
                                                "no sampled extreme points"));
    } else if (confirmed && !unbounded && !degenerate && usable.size() == summaries.size()) {
      // Every vertex has a full edge basis, so partial sums are finitely many
      // linear images of a compact polytope.
      report.verdicts.push_back(make_verdict<T>(
          "A5", "partial-sums-compact", VerdictStatus::Pass,
          "edge basis at every vertex; partial sums converge on " + std::to_string(pairs) + " sampled (p, x) pairs"));
    } else {
      report.verdicts.push_back(make_verdict<T>(
          "A5", "partial-sums-compact", VerdictStatus::HeuristicPass,
          "partial sums converge on " + std::to_string(pairs) + " sampled (p, x) pairs; compactness not checkable"));
    }
  }

  // A6 steepest edge attained within the truncated list
  if (!objective) {
    report.verdicts.push_back(make_verdict<T>("A6", "steepest-exists", VerdictStatus::NotCheckable, "no objective"));
  } else if (!truncated) {
    report.verdicts.push_back(make_verdict<T>("A6", "steepest-exists", ok, "finitely many edges at every extreme point"));
  } else if (!objective->tail_bound || !nu_edge || report.nu <= T(0)) {
    report.verdicts.push_back(make_verdict<T>("A6", "steepest-exists", VerdictStatus::NotCheckable,
                                              "no tail bound on the objective beyond the truncation"));
  } else {
    const T floor = -*objective->tail_bound / report.nu;
    const SampleSummary<T>* uncertified = nullptr;
    for (const auto* s : usable) {
      std::optional<T> best;
      for (const auto& e : s->edges) {
        T rate = *e.cost / e.length;
        if (!best || rate < *best) best = rate;
      }
      if (!best || *best > floor) {
        uncertified = s;
        break;
      }
    }
    if (uncertified) {
      report.verdicts.push_back(make_verdict<T>(
          "A6", "steepest-exists", VerdictStatus::NotCheckable,
          "an edge beyond the truncation could be steeper than every listed edge",
          point_witness(uncertified->p, std::nullopt, sys)));
    } else {
      report.verdicts.push_back(make_verdict<T>("A6", "steepest-exists", VerdictStatus::HeuristicPass,
                                                "truncated minimum beats the tail floor " + format_scalar(floor)));
    }
  }

  // A7 edge lengths bounded away from zero and infinity
  if (!nu_edge) {
    report.verdicts.push_back(make_verdict<T>("A7", "edge-lengths-bounded", VerdictStatus::NotCheckable, "no edges"));
  } else if (report.nu <= tol.zero || (truncated && nu_half && report.nu < *nu_half)) {
    report.verdicts.push_back(make_verdict<T>(
        "A7", "edge-lengths-bounded", VerdictStatus::Fail,
        truncated ? "shortest edge shrinks with the truncation horizon (nu -> 0)" : "zero-length edge",
        point_witness(nu_at->p, std::optional<ConstraintId>(nu_edge->leaving), sys,
                      std::optional<T>(nu_edge->length))));
  } else if (truncated && d_half && report.D > *d_half) {
    report.verdicts.push_back(make_verdict<T>(
        "A7", "edge-lengths-bounded", VerdictStatus::Fail, "longest edge grows with the truncation horizon",
        point_witness(d_at->p, std::optional<ConstraintId>(d_edge->leaving), sys,
                      std::optional<T>(d_edge->length))));
  } else {
    report.verdicts.push_back(make_verdict<T>("A7", "edge-lengths-bounded", ok,
                                              "nu = " + format_scalar(report.nu) + ", D = " + format_scalar(report.D)));
  }

  // A8 constraint functions bounded over extreme points
  if (truncated && report.xi > xi_half) {
    report.verdicts.push_back(make_verdict<T>(
        "A8", "bounded-at-extremes", VerdictStatus::Fail, "sup |phi(p)| grows with the truncation horizon",
        point_witness(xi_at->p, std::optional<ConstraintId>(xi_at->max_phi_id), sys,
                      std::optional<T>(report.xi))));
  } else {
    report.verdicts.push_back(make_verdict<T>("A8", "bounded-at-extremes", ok,
                                              "xi = " + format_scalar(report.xi)));
  }

  // A9 uniform convergence of edge costs
  if (!objective) {
    report.verdicts.push_back(make_verdict<T>("A9", "uniform-convergence-edge-costs", VerdictStatus::NotCheckable,
                                              "no objective"));
  } else if (truncated && !objective->tail_bound) {
    report.verdicts.push_back(make_verdict<T>("A9", "uniform-convergence-edge-costs", VerdictStatus::NotCheckable,
                                              "no certified tail bound beyond the truncation"));
  } else {
    bool all = std::all_of(report.cost_tail.begin(), report.cost_tail.end(),
                           [](const CostTailEntry& e) { return e.K.has_value(); });
    if (all) {
      report.verdicts.push_back(make_verdict<T>("A9", "uniform-convergence-edge-costs", ok,
                                                "K(eps) found for every tabulated eps"));
    } else {
      report.verdicts.push_back(make_verdict<T>(
          "A9", "uniform-convergence-edge-costs", VerdictStatus::NotCheckable,
          "certified tail " + format_scalar(*tail_sup) + " exceeds some tabulated eps"));
    }
  }
  return report;
}

template <class T>
ConstraintSystem<T> nondegeneracy_reduce(const ConstraintSystem<T>& sys, const Tolerances<T>& tol) {
  if (sys.extent() != Extent::Finite) {
    throw Error(ErrorKind::Unsupported, "redundancy reduction is only implemented for finite systems");
  }
  if (!is_bounded(sys, tol)) throw Error(ErrorKind::Precondition, "region is unbounded");
  if (enumerate_vertices(sys, tol).vertices.empty()) throw Error(ErrorKind::Precondition, "region is empty");

  std::vector<Constraint<T>> kept = sys.constraints();
  std::vector<ConstraintId> order;
  for (const auto& c : kept) order.push_back(c.id);
  std::sort(order.begin(), order.end(), IdOrder{});
  for (ConstraintId id : order) {
    std::vector<Constraint<T>> without;
    const Constraint<T>* removed = nullptr;
    for (const auto& c : kept) {
      if (c.id == id) {
        removed = &c;
      } else {
        without.push_back(c);
      }
    }
    if (without.empty()) continue;
    ConstraintSystem<T> candidate(without, sys.weights(), sys.extent());
    if (!is_bounded(candidate, tol)) continue;
    VertexSet<T> vs = enumerate_vertices(candidate, tol);
    bool redundant = std::all_of(vs.vertices.begin(), vs.vertices.end(), [&](const Point<T>& v) {
      return removed->bound - eval(removed->functional, v) >= -tol.active;
    });
    if (redundant) kept = std::move(without);
  }
  return ConstraintSystem<T>(std::move(kept), sys.weights(), sys.extent());
}

#define GSIMPLEX_INSTANTIATE_VALIDATORS(T)                                                        \
  template struct AuditReport<T>;                                                                 \
  template AuditReport<T> audit(const ConstraintSystem<T>&, const Objective<T>*, NormPolicy,      \
                                const SampleSpec&, const Tolerances<T>&);                         \
  template ConstraintSystem<T> nondegeneracy_reduce(const ConstraintSystem<T>&,                   \
                                                    const Tolerances<T>&);                        \
  template std::size_t horizon(const Coeffs<T>&);

GSIMPLEX_INSTANTIATE_VALIDATORS(double)
GSIMPLEX_INSTANTIATE_VALIDATORS(Rational)

}  // namespace gsimplex
