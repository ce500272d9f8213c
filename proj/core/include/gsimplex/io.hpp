#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "gsimplex/core.hpp"
#include "gsimplex/simplex.hpp"
#include "gsimplex/validators.hpp"

namespace gsimplex {

/// Contents of an instance file. Parsing is always exact; convert() the
/// members for floating-point runs.
struct Instance {
  ConstraintSystem<Rational> system;
  std::optional<Objective<Rational>> objective;
};

/// Instance files are YAML:
///
///   truncation: 3
///   model: finite            # or truncated
///   weights: geometric(1/2)  # or a list of N rationals
///   constraints:
///     - {id: 1, coeffs: [[1, "1"], [2, "-1/2"]], bound: "1"}
///   objective: {coeffs: [[1, "-1"]], constant: "0", tail_bound: "1/3"}
///
/// Throws Parse on malformed documents and Spec/Dimension on invalid data.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::filesystem::path& path);
std::string format_instance(const Instance& instance);

struct TraceOptions {
  // Points are written only when true or when the truncation is at most 32.
  bool emit_points = false;
};

/// One JSON record per iterate followed by a summary record. The pivot fields
/// of record n describe the move out of p^n and are null on the last record.
/// Exact values are written as "p/q" strings.
template <class T>
std::string format_trace(const SimplexTrace<T>& trace, const TraceOptions& options = {});

/// CSV with header n,value,gamma.
template <class T>
std::string format_plot(const SimplexTrace<T>& trace);

struct SectionSample {
  double alpha;
  double beta;
  bool accepted;
};

/// CSV with header alpha,beta,accepted.
std::string format_section(const std::vector<SectionSample>& samples);

/// YAML document with global constants and one block per assumption.
template <class T>
std::string format_audit(const AuditReport<T>& report);

/// Writes to a sibling temporary file and renames it over `path`.
void write_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace gsimplex
