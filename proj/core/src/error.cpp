#include "gsimplex/error.hpp"

namespace gsimplex {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::Lookup: return "lookup";
    case ErrorKind::Infeasible: return "infeasible";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::Unbounded: return "unbounded";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Bounds: return "bounds";
    case ErrorKind::Spec: return "spec";
    case ErrorKind::Sampling: return "sampling";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Budget: return "budget";
    case ErrorKind::Empty: return "empty";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::OracleMismatch: return "oracle-mismatch";
  }
  return "unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& message, std::optional<ConstraintId> id,
                    std::optional<std::size_t> iteration) {
  std::string text = std::string(to_string(kind)) + ": " + message;
  if (id) text += " [constraint " + std::to_string(*id) + "]";
  if (iteration) text += " [iteration " + std::to_string(*iteration) + "]";
  return text;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::optional<ConstraintId> constraint_id,
             std::optional<std::size_t> iteration)
    : std::runtime_error(compose(kind, message, constraint_id, iteration)),
      kind_(kind),
      constraint_id_(constraint_id),
      iteration_(iteration),
      base_message_(message) {}

Error Error::with_constraint(ConstraintId id) const {
  return Error(kind_, base_message_, id, iteration_);
}

Error Error::with_iteration(std::size_t n) const {
  return Error(kind_, base_message_, constraint_id_, n);
}

}  // namespace gsimplex
