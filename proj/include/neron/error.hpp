#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace neron {

enum class ErrorCode {
  kInvalidGraph,
  kUnknownVertex,
  kSupportMismatch,
  kDegreeNonzero,
  kWeightConstraint,
  kUnstableGraph,
  kNotABridge,
  kOutOfRange,
  kSingularMatrix,
  kNotPositiveDefinite,
  kTruncationOverflow,
  kNumericalDomain,
  kMalformedInput,
  kUsage,
};

// Machine-readable code string, e.g. "degree_nonzero".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace neron
