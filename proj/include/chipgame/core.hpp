#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>

namespace chipgame {

/// Parameters of the modulo dependent chip-collecting game.
///
/// Each round Alice collects either `a` or `b` chips and Bob collects the
/// other amount. Alice wins when her total is a multiple of `m`, Bob when his
/// total is a multiple of `n`. Construction enforces 0 < a < b < min(m, n)
/// and that the m*n state count is representable.
class GameParams {
 public:
  GameParams(std::uint64_t a, std::uint64_t b, std::uint64_t m, std::uint64_t n);

  /// The square game, m = n.
  static GameParams square(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return GameParams(a, b, n, n);
  }

  std::uint64_t a() const noexcept { return a_; }
  std::uint64_t b() const noexcept { return b_; }
  std::uint64_t m() const noexcept { return m_; }
  std::uint64_t n() const noexcept { return n_; }

  bool is_square() const noexcept { return m_ == n_; }
  std::size_t state_count() const noexcept { return static_cast<std::size_t>(m_ * n_); }

  friend bool operator==(const GameParams&, const GameParams&) = default;

 private:
  std::uint64_t a_;
  std::uint64_t b_;
  std::uint64_t m_;
  std::uint64_t n_;
};

std::ostream& operator<<(std::ostream& os, const GameParams& params);

/// Chip counts (x mod m, y mod n) of Alice and Bob.
struct Position {
  std::uint64_t x = 0;
  std::uint64_t y = 0;

  /// Reduces raw (possibly negative) counts into Z_m x Z_n.
  static Position reduced(const GameParams& params, std::int64_t x, std::int64_t y);

  friend auto operator<=>(const Position&, const Position&) = default;
};

std::ostream& operator<<(std::ostream& os, const Position& pos);

/// Flat index x*n + y into an m*n array.
inline std::size_t index_of(const GameParams& params, Position pos) noexcept {
  return static_cast<std::size_t>(pos.x * params.n() + pos.y);
}

inline Position position_at(const GameParams& params, std::size_t index) noexcept {
  return {index / params.n(), index % params.n()};
}

/// AliceLow is the step (+a,+b); AliceHigh is (+b,+a).
enum class MoveKind : std::uint8_t { AliceLow, AliceHigh };

inline constexpr MoveKind kMoves[] = {MoveKind::AliceLow, MoveKind::AliceHigh};

enum class PositionClass : std::uint8_t { Start, AliceWin, BobWin, Interior };

std::string_view to_string(MoveKind move);
std::string_view to_string(PositionClass cls);

/// Single-letter move code: 'L' for AliceLow, 'H' for AliceHigh.
char move_letter(MoveKind move);

Position step(const GameParams& params, Position pos, MoveKind move) noexcept;

/// Classifies a landing position. (0,0) re-landed is an Alice win: the x = 0
/// test runs before y = 0. The untouched start is never passed here.
PositionClass classify(const GameParams& params, Position pos) noexcept;

inline bool is_winning(PositionClass cls) noexcept {
  return cls == PositionClass::AliceWin || cls == PositionClass::BobWin;
}

/// Applies `moves` from (0,0), ignoring termination.
Position replay(const GameParams& params, std::span<const MoveKind> moves) noexcept;

}  // namespace chipgame
