#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gsimplex {

using ConstraintId = std::int64_t;

/// Canonical order of constraint ids: ascending magnitude, -j before j.
/// Coincides with ascending id when all ids are positive, and lists the two
/// bounds on coordinate j of a box at position j.
constexpr bool id_before(ConstraintId a, ConstraintId b) noexcept {
  const auto mag = [](ConstraintId v) { return v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v); };
  if (mag(a) != mag(b)) return mag(a) < mag(b);
  return a < b;
}

struct IdOrder {
  constexpr bool operator()(ConstraintId a, ConstraintId b) const noexcept { return id_before(a, b); }
};

enum class ErrorKind {
  Dimension,
  Lookup,
  Infeasible,
  Degenerate,
  Unbounded,
  Precondition,
  Bounds,
  Spec,
  Sampling,
  Unsupported,
  Budget,
  Empty,
  Parse,
  OracleMismatch,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library. The kind drives CLI exit codes;
/// the optional constraint id and iteration locate the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<ConstraintId> constraint_id = std::nullopt,
        std::optional<std::size_t> iteration = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<ConstraintId> constraint_id() const noexcept { return constraint_id_; }
  std::optional<std::size_t> iteration() const noexcept { return iteration_; }

  Error with_constraint(ConstraintId id) const;
  Error with_iteration(std::size_t n) const;

 private:
  ErrorKind kind_;
  std::optional<ConstraintId> constraint_id_;
  std::optional<std::size_t> iteration_;
  std::string base_message_;
};

}  // namespace gsimplex
