#include "chipgame/core.hpp"

#include <limits>
#include <ostream>
#include <sstream>

#include "chipgame/error.hpp"

namespace chipgame {

namespace {

// Keeps every sum of two residues and every product b*b inside 64 bits.
constexpr std::uint64_t kMaxModulus = std::numeric_limits<std::uint32_t>::max();

std::int64_t mod_floor(std::int64_t v, std::uint64_t modulus) {
  const auto md = static_cast<std::int64_t>(modulus);
  std::int64_t r = v % md;
  return r < 0 ? r + md : r;
}

}  // namespace

GameParams::GameParams(std::uint64_t a, std::uint64_t b, std::uint64_t m, std::uint64_t n)
    : a_(a), b_(b), m_(m), n_(n) {
  auto fail = [&](const char* why) {
    std::ostringstream os;
    os << "invalid game parameters (a=" << a << ", b=" << b << ", m=" << m << ", n=" << n
       << "): " << why;
    throw Error(ErrorCode::Domain, os.str());
  };
  if (a == 0) fail("a must be positive");
  if (a >= b) fail("a must be less than b");
  if (b >= m || b >= n) fail("b must be less than min(m, n)");
  if (m > kMaxModulus || n > kMaxModulus) fail("moduli must fit in 32 bits");
  if (m > std::numeric_limits<std::size_t>::max() / n) fail("m*n overflows the index type");
}

std::ostream& operator<<(std::ostream& os, const GameParams& p) {
  return os << "(a=" << p.a() << ", b=" << p.b() << ", m=" << p.m() << ", n=" << p.n() << ")";
}

Position Position::reduced(const GameParams& params, std::int64_t x, std::int64_t y) {
  return {static_cast<std::uint64_t>(mod_floor(x, params.m())),
          static_cast<std::uint64_t>(mod_floor(y, params.n()))};
}

std::ostream& operator<<(std::ostream& os, const Position& pos) {
  return os << '(' << pos.x << ',' << pos.y << ')';
}

std::string_view to_string(MoveKind move) {
  return move == MoveKind::AliceLow ? "AliceLow" : "AliceHigh";
}

std::string_view to_string(PositionClass cls) {
  switch (cls) {
    case PositionClass::Start:
      return "Start";
    case PositionClass::AliceWin:
      return "AliceWin";
    case PositionClass::BobWin:
      return "BobWin";
    case PositionClass::Interior:
      return "Interior";
  }
  return "?";
}

char move_letter(MoveKind move) { return move == MoveKind::AliceLow ? 'L' : 'H'; }

Position step(const GameParams& params, Position pos, MoveKind move) noexcept {
  const std::uint64_t dx = move == MoveKind::AliceLow ? params.a() : params.b();
  const std::uint64_t dy = move == MoveKind::AliceLow ? params.b() : params.a();
  return {(pos.x + dx) % params.m(), (pos.y + dy) % params.n()};
}

PositionClass classify(const GameParams&, Position pos) noexcept {
  if (pos.x == 0) return PositionClass::AliceWin;
  if (pos.y == 0) return PositionClass::BobWin;
  return PositionClass::Interior;
}

Position replay(const GameParams& params, std::span<const MoveKind> moves) noexcept {
  Position pos{};
  for (MoveKind mv : moves) pos = step(params, pos, mv);
  return pos;
}

}  // namespace chipgame
