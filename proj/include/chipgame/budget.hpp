#pragma once

#include <cstddef>

namespace chipgame {

inline constexpr std::size_t kDefaultStateBudget = std::size_t{1} << 24;

/// Largest m*n state count the analyses accept. Reads CHIPGAME_STATE_BUDGET
/// when set to a positive integer, otherwise kDefaultStateBudget.
std::size_t state_budget();

/// Throws a Resource error when `states` exceeds state_budget().
void require_within_budget(std::size_t states, const char* what);

}  // namespace chipgame
