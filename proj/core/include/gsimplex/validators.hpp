#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsimplex/geometry.hpp"

namespace gsimplex {

enum class VerdictStatus { Pass, Fail, HeuristicPass, NotCheckable };

std::string_view to_string(VerdictStatus status);

template <class T>
struct Witness {
  std::optional<Point<T>> point;
  std::optional<ConstraintId> constraint;
  // Largest coordinate index touched by the witness constraint.
  std::optional<std::size_t> horizon;
  std::optional<T> value;
};

template <class T>
struct Verdict {
  std::string id;   // "A1" .. "A9"
  std::string tag;  // short statement name
  VerdictStatus status = VerdictStatus::NotCheckable;
  std::string detail;
  std::optional<Witness<T>> witness;
};

struct CostTailEntry {
  double epsilon;
  // Smallest K with sup_p sum_{k > K} |c(e_k(p))| (plus the certified tail) <= epsilon.
  std::optional<std::size_t> K;
};

enum class SampleKind { Exhaustive, RandomBinary };

/// Exhaustive uses the oracle's vertex enumeration; RandomBinary draws seeded
/// 0/1 points at the truncation level and keeps those that are extreme.
/// Samples are prefix-stable: a larger size with the same seed is a superset.
struct SampleSpec {
  SampleKind kind = SampleKind::Exhaustive;
  std::size_t size = 256;
  std::uint64_t seed = 0;
  std::size_t decomposition_pairs = 16;
  unsigned threads = 1;
};

template <class T>
struct AuditReport {
  T rho{0};
  T xi{0};
  T nu{0};
  T D{0};
  std::vector<CostTailEntry> cost_tail;
  std::vector<Verdict<T>> verdicts;
  std::string samples;
  std::size_t sample_count = 0;
  std::size_t truncation = 0;
  NormPolicy policy = NormPolicy::UnitEdge;
  Extent extent = Extent::Finite;

  const Verdict<T>& verdict(std::string_view id) const;
  bool any_failed() const;
};

/// Estimates rho, xi, nu, D and the edge-cost tail table over a sample of
/// extreme points and issues one verdict per assumption A1..A9. Verdicts that
/// rest on a sample or a truncation are HeuristicPass at best; Fail always
/// carries a witness.
template <class T>
AuditReport<T> audit(const ConstraintSystem<T>& sys, const Objective<T>* objective, NormPolicy policy,
                     const SampleSpec& sample, const Tolerances<T>& tol);

/// Greedily drops redundant constraints in canonical id order until removing
/// any remaining one would enlarge the region. Finite bounded systems only.
template <class T>
ConstraintSystem<T> nondegeneracy_reduce(const ConstraintSystem<T>& sys, const Tolerances<T>& tol);

/// Largest coordinate index in the support of a functional.
template <class T>
std::size_t horizon(const Coeffs<T>& f);

}  // namespace gsimplex
