#include "neron/error.hpp"

namespace neron {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidGraph: return "invalid_graph";
    case ErrorCode::kUnknownVertex: return "unknown_vertex";
    case ErrorCode::kSupportMismatch: return "support_mismatch";
    case ErrorCode::kDegreeNonzero: return "degree_nonzero";
    case ErrorCode::kWeightConstraint: return "weight_constraint";
    case ErrorCode::kUnstableGraph: return "unstable_graph";
    case ErrorCode::kNotABridge: return "not_a_bridge";
    case ErrorCode::kOutOfRange: return "out_of_range";
    case ErrorCode::kSingularMatrix: return "singular_matrix";
    case ErrorCode::kNotPositiveDefinite: return "not_positive_definite";
    case ErrorCode::kTruncationOverflow: return "truncation_overflow";
    case ErrorCode::kNumericalDomain: return "numerical_domain";
    case ErrorCode::kMalformedInput: return "malformed_input";
    case ErrorCode::kUsage: return "usage";
  }
  return "unknown";
}

}  // namespace neron
