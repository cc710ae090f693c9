#pragma once

#include <cstdint>
#include <vector>

#include "chipgame/core.hpp"
#include "chipgame/execution.hpp"
#include "chipgame/rational.hpp"

namespace chipgame {

/// Exact absorption probabilities of the walk started at (0,0).
///
/// `transient` lists the reachable Interior positions in BFS discovery order;
/// `h_alice[i]` / `h_bob[i]` are the probabilities that a walk currently at
/// `transient[i]` eventually lands on an Alice / Bob win.
struct ProbabilityReport {
  GameParams params;
  Rational coin_bias;  // probability of AliceLow
  Rational p_alice;
  Rational p_bob;
  Rational p_nonterminating;

  std::vector<Position> transient;
  std::vector<Rational> h_alice;
  std::vector<Rational> h_bob;
};

/// Builds and solves the transient system over the reachable Interior
/// positions. Positions from which no winning position can be reached get
/// h = 0 directly; the rest form a nonsingular system solved by exact
/// Gaussian elimination. Domain error unless 0 < coin_bias < 1; Resource
/// error beyond the state budget.
ProbabilityReport solve_probabilities(const GameParams& params, const Rational& coin_bias);

/// Per-state residuals h(s) - bias*h(s+L) - (1-bias)*h(s+H) of both solved
/// systems (Alice then Bob for each transient state), followed by the two
/// residuals of the start relation p = bias*h(L) + (1-bias)*h(H). All zero for
/// a correct solve.
std::vector<Rational> solver_residuals(const ProbabilityReport& report);

struct SimulationCounts {
  std::uint64_t alice_wins = 0;
  std::uint64_t bob_wins = 0;
  std::uint64_t truncated = 0;

  friend bool operator==(const SimulationCounts&, const SimulationCounts&) = default;
};

struct SimulationOptions {
  std::uint64_t move_cap = 0;  // 0 selects 10*m*n
  Execution execution = Execution::Serial;
};

/// Trials are split into shards of kSimulationShard consecutive trials. Shard s
/// draws from std::mt19937_64 seeded with seed + s * 0x9E3779B97F4A7C15
/// (mod 2^64). Each coin toss draws 64-bit words u, rejecting
/// u >= floor(2^64 / q) * q, and plays AliceLow iff u mod q < p for bias p/q.
/// Counts therefore do not depend on the execution policy.
inline constexpr std::uint64_t kSimulationShard = 1024;

/// Seeded Monte Carlo of the game. Walks that reach the move cap without
/// landing on a winning position are counted as truncated. Domain error when
/// trials == 0, the bias is outside (0,1) or its denominator exceeds 64 bits.
SimulationCounts simulate(const GameParams& params, const Rational& coin_bias,
                          std::uint64_t trials, std::uint64_t seed,
                          const SimulationOptions& options = {});

}  // namespace chipgame
