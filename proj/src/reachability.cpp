#include "chipgame/reachability.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <sstream>

#include "chipgame/budget.hpp"
#include "chipgame/error.hpp"

namespace chipgame {

ReachabilityReport::ReachabilityReport(const GameParams& params)
    : params_(params),
      depth_(params.state_count(), kUnreached),
      parent_(params.state_count(), kFromStart),
      move_(params.state_count(), MoveKind::AliceLow) {}

std::optional<std::uint32_t> ReachabilityReport::depth(Position pos) const noexcept {
  const std::int32_t d = depth_[index_of(params_, pos)];
  if (d <= 0) return std::nullopt;
  return static_cast<std::uint32_t>(d);
}

std::optional<Position> ReachabilityReport::parent(Position pos) const noexcept {
  const std::size_t idx = index_of(params_, pos);
  if (depth_[idx] <= 0 || parent_[idx] == kFromStart) return std::nullopt;
  return position_at(params_, parent_[idx]);
}

std::vector<Position> ReachabilityReport::reachable() const {
  std::vector<Position> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < depth_.size(); ++i) {
    if (depth_[i] > 0) out.push_back(position_at(params_, i));
  }
  return out;
}

ReachabilityReport reachable_set(const GameParams& params) {
  require_within_budget(params.state_count(), "reachability search");
  ReachabilityReport report(params);

  // The queue holds flat indices; kFromStart stands for the untouched start.
  std::deque<std::size_t> queue{ReachabilityReport::kFromStart};
  while (!queue.empty()) {
    const std::size_t from = queue.front();
    queue.pop_front();
    const Position pos =
        from == ReachabilityReport::kFromStart ? Position{} : position_at(params, from);
    const std::int32_t d = from == ReachabilityReport::kFromStart ? 0 : report.depth_[from];
    for (MoveKind mv : kMoves) {
      const Position next = step(params, pos, mv);
      const std::size_t idx = index_of(params, next);
      if (report.depth_[idx] != ReachabilityReport::kUnreached) continue;
      report.depth_[idx] = d + 1;
      report.parent_[idx] = from;
      report.move_[idx] = mv;
      report.order_.push_back(next);
      ++report.count_;
      report.max_depth_ = static_cast<std::uint32_t>(d + 1);
      if (classify(params, next) == PositionClass::Interior) queue.push_back(idx);
    }
  }
  return report;
}

WitnessPath witness_path(const ReachabilityReport& report, Position target) {
  const GameParams& params = report.params();
  if (target.x >= params.m() || target.y >= params.n() || !report.contains(target)) {
    std::ostringstream os;
    os << "position " << target << " is not reachable in game " << params;
    throw Error(ErrorCode::NotFound, os.str());
  }
  WitnessPath path{{}, target};
  std::optional<Position> cur = target;
  while (cur) {
    path.moves.push_back(report.parent_move(*cur));
    cur = report.parent(*cur);
  }
  std::reverse(path.moves.begin(), path.moves.end());
  return path;
}

bool witness_is_valid(const GameParams& params, const WitnessPath& path) {
  if (path.moves.empty()) return false;
  Position pos{};
  for (std::size_t i = 0; i < path.moves.size(); ++i) {
    pos = step(params, pos, path.moves[i]);
    const bool last = i + 1 == path.moves.size();
    if (!last && classify(params, pos) != PositionClass::Interior) return false;
  }
  return pos == path.landing;
}

bool all_wins_alice(const ReachabilityReport& report) {
  const GameParams& params = report.params();
  return std::none_of(report.discovery_order().begin(), report.discovery_order().end(),
                      [&](Position p) { return classify(params, p) == PositionClass::BobWin; });
}

bool full_reachability_square(const ReachabilityReport& report) {
  const GameParams& params = report.params();
  if (!params.is_square()) {
    std::ostringstream os;
    os << "full reachability is defined for the square game only, got " << params;
    throw Error(ErrorCode::Domain, os.str());
  }
  const Position low{params.a(), params.a()};
  const Position high{params.b(), params.b()};
  if (report.contains(low) || report.contains(high)) return false;
  return report.reachable_count() + 2 == params.state_count();
}

std::set<Position> round_diagonal(const GameParams& params, std::uint64_t r) {
  std::set<Position> out;
  const unsigned __int128 a = params.a(), b = params.b();
  for (std::uint64_t i = 0; i <= r; ++i) {
    const unsigned __int128 x = a * (r - i) + b * i;
    const unsigned __int128 y = a * i + b * (r - i);
    out.insert({static_cast<std::uint64_t>(x % params.m()),
                static_cast<std::uint64_t>(y % params.n())});
  }
  return out;
}

Position q_param(const GameParams& params, std::int64_t i, std::int64_t j) {
  if (!params.is_square()) {
    std::ostringstream os;
    os << "q parametrization is defined for the square game only, got " << params;
    throw Error(ErrorCode::Domain, os.str());
  }
  const auto n = static_cast<__int128>(params.n());
  const auto a = static_cast<__int128>(params.a());
  const auto b = static_cast<__int128>(params.b());
  auto reduce = [n](__int128 v) {
    v %= n;
    return static_cast<std::uint64_t>(v < 0 ? v + n : v);
  };
  return {reduce(i * a + j * (a + b)), reduce(i * b + j * (a + b))};
}

char grid_cell(const ReachabilityReport& report, Position pos) {
  if (!report.contains(pos)) return pos == Position{} ? 'S' : '.';
  switch (classify(report.params(), pos)) {
    case PositionClass::AliceWin:
      return 'A';
    case PositionClass::BobWin:
      return 'B';
    default:
      return 'I';
  }
}

void write_grid(std::ostream& os, const ReachabilityReport& report) {
  const GameParams& p = report.params();
  os << p.a() << ' ' << p.b() << ' ' << p.m() << ' ' << p.n() << '\n';
  for (std::uint64_t x = 0; x < p.m(); ++x) {
    for (std::uint64_t y = 0; y < p.n(); ++y) os << grid_cell(report, {x, y});
    os << '\n';
  }
}

}  // namespace chipgame
