#ifndef SEQSEL_COMMON_HPP
#define SEQSEL_COMMON_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqsel {

// Machine-readable failure categories. The CLI maps these to the "code"
// field of the error JSON it prints on stderr.
enum class ErrorCode {
  shape_mismatch,    // input tensor/vector dimensions disagree
  precondition,      // documented precondition violated (empty bag, empty sequence, ...)
  parameter,         // out-of-range scalar parameter (k, K, epochs, n_clusters, ...)
  vocabulary,        // word index outside the vocabulary
  sequencing,        // candidate region does not extend the partial sequence
  normalization,     // feature vector expected to be unit norm
  support,           // distribution with a zero entry where positive mass is required
  bounds,            // grid/region index out of range
  cost_model,        // nonpositive region cost
  divergence,        // non-finite objective during iterative optimization
  convergence,       // iteration cap reached without convergence
  range,             // tensor value outside its documented range
  format,            // file magic/header/layout mismatch
  truncated,         // file shorter than its header promises
  empty_input,       // operation received no usable data
  internal,          // invariant that should be unreachable
  io,                // filesystem-level failure
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace seqsel

#endif  // SEQSEL_COMMON_HPP
