#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <vector>

#include "chipgame/core.hpp"

namespace chipgame {

/// Exact reachable set of the terminating walk from (0,0).
///
/// Storage is flat over the m*n grid, indexed by index_of(). The start is the
/// BFS root and is not itself a member; (0,0) becomes a member only when a
/// walk re-lands on it, in which case it is an Alice win.
class ReachabilityReport {
 public:
  static constexpr std::int32_t kUnreached = -1;
  static constexpr std::size_t kFromStart = static_cast<std::size_t>(-1);

  const GameParams& params() const noexcept { return params_; }

  bool contains(Position pos) const noexcept { return depth_[index_of(params_, pos)] > 0; }

  /// Fewest moves to land on `pos`, or nullopt if unreachable.
  std::optional<std::uint32_t> depth(Position pos) const noexcept;

  /// BFS predecessor of a reachable position. nullopt for depth-1 positions,
  /// whose predecessor is the start.
  std::optional<Position> parent(Position pos) const noexcept;

  /// The move taken from the predecessor (or from the start) to land on `pos`.
  MoveKind parent_move(Position pos) const noexcept { return move_[index_of(params_, pos)]; }

  /// Reachable positions in flat-index order.
  std::vector<Position> reachable() const;
  std::size_t reachable_count() const noexcept { return count_; }
  std::uint32_t max_depth() const noexcept { return max_depth_; }

  /// Reachable positions in BFS discovery order.
  const std::vector<Position>& discovery_order() const noexcept { return order_; }

 private:
  friend ReachabilityReport reachable_set(const GameParams& params);

  explicit ReachabilityReport(const GameParams& params);

  GameParams params_;
  std::vector<std::int32_t> depth_;
  std::vector<std::size_t> parent_;
  std::vector<MoveKind> move_;
  std::vector<Position> order_;
  std::size_t count_ = 0;
  std::uint32_t max_depth_ = 0;
};

/// Breadth-first search from (0,0), expanding AliceLow before AliceHigh.
/// Winning positions are recorded but never expanded. Throws a Resource error
/// when m*n exceeds the state budget.
ReachabilityReport reachable_set(const GameParams& params);

struct WitnessPath {
  std::vector<MoveKind> moves;
  Position landing;
};

/// Move word from (0,0) to `target` recovered from the BFS parent links.
/// Throws NotFound when `target` is not reachable.
WitnessPath witness_path(const ReachabilityReport& report, Position target);

/// True iff replaying `path` from (0,0) visits only Interior positions before
/// landing on `path.landing`.
bool witness_is_valid(const GameParams& params, const WitnessPath& path);

/// True iff no reachable position is a Bob win.
bool all_wins_alice(const ReachabilityReport& report);

/// True iff the reachable set is exactly Z_n x Z_n without (a,a) and (b,b).
/// Throws a Domain error for a non-square game.
bool full_reachability_square(const ReachabilityReport& report);

/// Positions after exactly r moves ignoring termination: the points
/// ((a(r-i)+bi) mod m, (ai+b(r-i)) mod n) for 0 <= i <= r, deduplicated.
std::set<Position> round_diagonal(const GameParams& params, std::uint64_t r);

/// Square-game parametrization ((ia+j(a+b)) mod n, (ib+j(a+b)) mod n).
/// Throws a Domain error when m != n.
Position q_param(const GameParams& params, std::int64_t i, std::int64_t j);

/// Grid cell letters: '.' unreachable, 'I' interior, 'A' Alice win,
/// 'B' Bob win, 'S' the start when it is never re-landed.
char grid_cell(const ReachabilityReport& report, Position pos);

/// Header line "a b m n" followed by one row per x, one letter per y.
void write_grid(std::ostream& os, const ReachabilityReport& report);

}  // namespace chipgame
