#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ecpart {

/// Failure categories raised by the library.
///
/// Everything up to `kInvariantViolation` is a caller error (bad input or an
/// unmet precondition). The invariant codes signal a bug in this library:
/// they guard statements that hold by theorem and are never expected to fire.
enum class Errc {
  kInvalidArgument,
  kInvalidGraph,
  kParseError,
  kPreconditionViolated,
  kNotComplete,
  kNotCompleteBipartite,
  kNotOriented,
  kRainbowTrianglePresent,
  kEmptyCore,
  kMalformedPartition,
  kPaletteCollision,
  kUnsatisfiable,
  kAttemptsExhausted,
  kMissingOracleValue,
  kNotGood,

  kInvariantViolation,
  kClassificationFailure,
  kStuckInvariantViolation,
  kCertificateCheckFailure,
};

std::string_view errc_name(Errc code) noexcept;

inline bool is_internal(Errc code) noexcept {
  return code >= Errc::kInvariantViolation;
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ecpart
