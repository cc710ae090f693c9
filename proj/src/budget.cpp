#include "chipgame/budget.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

#include "chipgame/error.hpp"

namespace chipgame {

std::size_t state_budget() {
  const char* env = std::getenv("CHIPGAME_STATE_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultStateBudget;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  return kDefaultStateBudget;
}

void require_within_budget(std::size_t states, const char* what) {
  const std::size_t budget = state_budget();
  if (states > budget) {
    std::ostringstream os;
    os << what << " needs " << states << " states, budget is " << budget
       << " (set CHIPGAME_STATE_BUDGET to raise it)";
    throw Error(ErrorCode::Resource, os.str());
  }
}

}  // namespace chipgame
