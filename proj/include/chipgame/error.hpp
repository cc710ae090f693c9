#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chipgame {

enum class ErrorCode {
  Domain,              // malformed input: violates parameter or precondition rules
  HypothesisViolation, // well-formed input outside a characterization's hypothesis
  Resource,            // state count beyond the configured budget
  NotFound,            // lookup of an unreachable position
};

/// Stable lowercase identifier, used as the machine-parsable reason code.
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace chipgame
