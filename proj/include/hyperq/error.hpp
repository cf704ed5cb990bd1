#pragma once

#include <stdexcept>
#include <string>

namespace hyperq {

// Every failure mode the library reports deliberately. The names double as
// stable identifiers in CLI error output, so renaming one is a breaking change.
enum class errc {
  non_uniform_edge,
  duplicate_edge,
  empty_edge_list,
  unknown_vertex,
  uniformity_mismatch,
  internal_consistency,
  no_convergence,
  order_limit_exceeded,
  dimension_mismatch,
  zero_vector,
  not_a_subgraph,
  not_balanced,
  non_positive_eigenvalue,
  bad_params,
  disconnected,
  degenerate_spectrum,
  too_few_edges,
  not_near_integer,
  too_many_edges,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::non_uniform_edge: return "NonUniformEdge";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::empty_edge_list: return "EmptyEdgeList";
    case errc::unknown_vertex: return "UnknownVertex";
    case errc::uniformity_mismatch: return "UniformityMismatch";
    case errc::internal_consistency: return "InternalConsistency";
    case errc::no_convergence: return "NoConvergence";
    case errc::order_limit_exceeded: return "OrderLimitExceeded";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::zero_vector: return "ZeroVector";
    case errc::not_a_subgraph: return "NotASubgraph";
    case errc::not_balanced: return "NotBalanced";
    case errc::non_positive_eigenvalue: return "NonPositiveEigenvalue";
    case errc::bad_params: return "BadParams";
    case errc::disconnected: return "Disconnected";
    case errc::degenerate_spectrum: return "DegenerateSpectrum";
    case errc::too_few_edges: return "TooFewEdges";
    case errc::not_near_integer: return "NotNearInteger";
    case errc::too_many_edges: return "TooManyEdges";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) {
  throw error(code, detail);
}

}  // namespace hyperq
