#include "chipgame/error.hpp"

namespace chipgame {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Domain:
      return "domain_error";
    case ErrorCode::HypothesisViolation:
      return "hypothesis_violation";
    case ErrorCode::Resource:
      return "resource_error";
    case ErrorCode::NotFound:
      return "not_found";
  }
  return "unknown_error";
}

}  // namespace chipgame
