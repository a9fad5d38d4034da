#include "seqsel/common.hpp"

namespace seqsel {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::shape_mismatch: return "shape-mismatch";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::parameter: return "parameter";
    case ErrorCode::vocabulary: return "vocabulary";
    case ErrorCode::sequencing: return "sequencing";
    case ErrorCode::normalization: return "normalization";
    case ErrorCode::support: return "support";
    case ErrorCode::bounds: return "bounds";
    case ErrorCode::cost_model: return "cost-model";
    case ErrorCode::divergence: return "divergence";
    case ErrorCode::convergence: return "convergence";
    case ErrorCode::range: return "range";
    case ErrorCode::format: return "format";
    case ErrorCode::truncated: return "truncated";
    case ErrorCode::empty_input: return "empty-input";
    case ErrorCode::internal: return "internal";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

}  // namespace seqsel
