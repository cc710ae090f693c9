#include "chipgame/prob.hpp"

#include <algorithm>
#include <array>
#include <random>
#include "chipgame/budget.hpp"
#include "chipgame/error.hpp"
#include "chipgame/linalg.hpp"
#include "chipgame/reachability.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chipgame {

namespace {

void require_open_unit(const Rational& bias) {
  if (sgn(bias) <= 0 || cmp(bias, 1) >= 0) {
    throw Error(ErrorCode::Domain,
                "coin bias must lie strictly between 0 and 1, got " + format_rational(bias));
  }
}

constexpr std::size_t kAbsorbed = static_cast<std::size_t>(-1);

// One outgoing edge of a transient state: either into another transient state
// (slot) or onto a winning position (slot == kAbsorbed, cls says whose).
struct Edge {
  std::size_t slot = kAbsorbed;
  PositionClass cls = PositionClass::Interior;
};

struct Chain {
  std::vector<Position> transient;
  std::vector<std::array<Edge, 2>> edges;  // [AliceLow, AliceHigh]
  std::array<Edge, 2> start;
};

Edge edge_to(const GameParams& params, Position next, const std::vector<std::size_t>& slot_of) {
  const PositionClass cls = classify(params, next);
  if (cls != PositionClass::Interior) return {kAbsorbed, cls};
  return {slot_of[index_of(params, next)], cls};
}

Chain build_chain(const GameParams& params) {
  const ReachabilityReport reach = reachable_set(params);
  Chain chain;
  std::vector<std::size_t> slot_of(params.state_count(), kAbsorbed);
  for (Position p : reach.discovery_order()) {
    if (classify(params, p) != PositionClass::Interior) continue;
    slot_of[index_of(params, p)] = chain.transient.size();
    chain.transient.push_back(p);
  }
  chain.edges.reserve(chain.transient.size());
  for (Position p : chain.transient) {
    chain.edges.push_back({edge_to(params, step(params, p, MoveKind::AliceLow), slot_of),
                           edge_to(params, step(params, p, MoveKind::AliceHigh), slot_of)});
  }
  chain.start = {edge_to(params, step(params, {}, MoveKind::AliceLow), slot_of),
                 edge_to(params, step(params, {}, MoveKind::AliceHigh), slot_of)};
  return chain;
}

// Transient states with a path to some winning position, by backward search.
std::vector<bool> can_absorb(const Chain& chain) {
  const std::size_t k = chain.transient.size();
  std::vector<std::vector<std::size_t>> preds(k);
  std::vector<bool> mark(k, false);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < k; ++s) {
    for (const Edge& e : chain.edges[s]) {
      if (e.slot == kAbsorbed) {
        if (!mark[s]) {
          mark[s] = true;
          stack.push_back(s);
        }
      } else {
        preds[e.slot].push_back(s);
      }
    }
  }
  while (!stack.empty()) {
    const std::size_t s = stack.back();
    stack.pop_back();
    for (std::size_t p : preds[s]) {
      if (!mark[p]) {
        mark[p] = true;
        stack.push_back(p);
      }
    }
  }
  return mark;
}

// Value of landing via `e`: 1/0 indicator on a winning position, else h.
const Rational& edge_value(const Edge& e, PositionClass target, const std::vector<Rational>& h,
                           const Rational& one, const Rational& zero) {
  if (e.slot != kAbsorbed) return h[e.slot];
  return e.cls == target ? one : zero;
}

}  // namespace

ProbabilityReport solve_probabilities(const GameParams& params, const Rational& coin_bias) {
  require_open_unit(coin_bias);
  const Chain chain = build_chain(params);
  const std::size_t k = chain.transient.size();
  const std::vector<bool> live = can_absorb(chain);

  std::vector<std::size_t> row_of(k, kAbsorbed);
  std::size_t rows = 0;
  for (std::size_t s = 0; s < k; ++s) {
    if (live[s]) row_of[s] = rows++;
  }
  require_within_budget(rows * rows, "dense probability solve");

  const Rational low = coin_bias;
  const Rational high = 1 - coin_bias;
  const Rational one(1), zero(0);

  // (I - Q) h = r with columns [Alice, Bob]. Edges into dead states carry
  // h = 0 and drop out.
  RationalMatrix lhs(rows, rows);
  RationalMatrix rhs(rows, 2);
  for (std::size_t s = 0; s < k; ++s) {
    if (!live[s]) continue;
    const std::size_t r = row_of[s];
    lhs(r, r) += 1;
    for (std::size_t mv = 0; mv < 2; ++mv) {
      const Edge& e = chain.edges[s][mv];
      const Rational& w = mv == 0 ? low : high;
      if (e.slot == kAbsorbed) {
        rhs(r, e.cls == PositionClass::AliceWin ? 0 : 1) += w;
      } else if (live[e.slot]) {
        lhs(r, row_of[e.slot]) -= w;
      }
    }
  }
  const RationalMatrix solution = solve_exact(std::move(lhs), std::move(rhs));

  ProbabilityReport report{params, coin_bias, 0, 0, 0, chain.transient, {}, {}};
  report.h_alice.assign(k, Rational(0));
  report.h_bob.assign(k, Rational(0));
  for (std::size_t s = 0; s < k; ++s) {
    if (!live[s]) continue;
    report.h_alice[s] = solution(row_of[s], 0);
    report.h_bob[s] = solution(row_of[s], 1);
  }
  const auto& [sl, sh] = chain.start;
  report.p_alice = low * edge_value(sl, PositionClass::AliceWin, report.h_alice, one, zero) +
                   high * edge_value(sh, PositionClass::AliceWin, report.h_alice, one, zero);
  report.p_bob = low * edge_value(sl, PositionClass::BobWin, report.h_bob, one, zero) +
                 high * edge_value(sh, PositionClass::BobWin, report.h_bob, one, zero);
  report.p_nonterminating = 1 - report.p_alice - report.p_bob;
  return report;
}

std::vector<Rational> solver_residuals(const ProbabilityReport& report) {
  const GameParams& params = report.params;
  const std::size_t k = report.transient.size();
  std::vector<std::size_t> slot_of(params.state_count(), kAbsorbed);
  for (std::size_t s = 0; s < k; ++s) slot_of[index_of(params, report.transient[s])] = s;

  const Rational low = report.coin_bias;
  const Rational high = 1 - report.coin_bias;
  const Rational one(1), zero(0);
  auto value = [&](Position p, PositionClass target, const std::vector<Rational>& h) -> const Rational& {
    return edge_value(edge_to(params, p, slot_of), target, h, one, zero);
  };
  auto residual = [&](const Rational& lhs, Position from, PositionClass target,
                      const std::vector<Rational>& h) -> Rational {
    return lhs - low * value(step(params, from, MoveKind::AliceLow), target, h) -
           high * value(step(params, from, MoveKind::AliceHigh), target, h);
  };

  std::vector<Rational> out;
  out.reserve(2 * k + 2);
  for (std::size_t s = 0; s < k; ++s) {
    out.push_back(residual(report.h_alice[s], report.transient[s], PositionClass::AliceWin, report.h_alice));
    out.push_back(residual(report.h_bob[s], report.transient[s], PositionClass::BobWin, report.h_bob));
  }
  out.push_back(residual(report.p_alice, {}, PositionClass::AliceWin, report.h_alice));
  out.push_back(residual(report.p_bob, {}, PositionClass::BobWin, report.h_bob));
  return out;
}

namespace {

struct Coin {
  std::uint64_t p;
  std::uint64_t q;
  std::uint64_t limit;  // accept u < limit; 0 means every u is accepted

  bool toss_low(std::mt19937_64& rng) const {
    std::uint64_t u;
    do {
      u = rng();
    } while (limit != 0 && u >= limit);
    return u % q < p;
  }
};

Coin make_coin(const Rational& bias) {
  if (!bias.get_den().fits_ulong_p() || sizeof(unsigned long) < sizeof(std::uint64_t)) {
    throw Error(ErrorCode::Domain, "simulation needs a bias denominator that fits 64 bits");
  }
  const std::uint64_t q = bias.get_den().get_ui();
  const std::uint64_t p = bias.get_num().get_ui();
  // 2^64 mod q == (2^64 - q) mod q; limit = 2^64 - (2^64 mod q), 0 meaning 2^64.
  const std::uint64_t rem = (0 - q) % q;
  return {p, q, rem == 0 ? 0 : 0 - rem};
}

SimulationCounts run_shard(const GameParams& params, const Coin& coin, std::uint64_t trials,
                           std::uint64_t seed, std::uint64_t cap) {
  std::mt19937_64 rng(seed);
  SimulationCounts counts;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Position pos{};
    PositionClass cls = PositionClass::Start;
    for (std::uint64_t moves = 0; moves < cap; ++moves) {
      pos = step(params, pos, coin.toss_low(rng) ? MoveKind::AliceLow : MoveKind::AliceHigh);
      cls = classify(params, pos);
      if (cls != PositionClass::Interior) break;
    }
    if (cls == PositionClass::AliceWin) {
      ++counts.alice_wins;
    } else if (cls == PositionClass::BobWin) {
      ++counts.bob_wins;
    } else {
      ++counts.truncated;
    }
  }
  return counts;
}

}  // namespace

SimulationCounts simulate(const GameParams& params, const Rational& coin_bias,
                          std::uint64_t trials, std::uint64_t seed,
                          const SimulationOptions& options) {
  require_open_unit(coin_bias);
  if (trials == 0) throw Error(ErrorCode::Domain, "simulation needs at least one trial");
  const Coin coin = make_coin(coin_bias);
  const std::uint64_t cap = options.move_cap != 0 ? options.move_cap : 10 * params.m() * params.n();

  const std::uint64_t shards = (trials + kSimulationShard - 1) / kSimulationShard;
  std::vector<SimulationCounts> per_shard(shards);
  auto shard_job = [&](std::uint64_t s) {
    const std::uint64_t begin = s * kSimulationShard;
    const std::uint64_t count = std::min(kSimulationShard, trials - begin);
    per_shard[s] = run_shard(params, coin, count, seed + s * 0x9E3779B97F4A7C15ULL, cap);
  };

  if (options.execution == Execution::Parallel) {
    const auto n = static_cast<std::int64_t>(shards);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t s = 0; s < n; ++s) shard_job(static_cast<std::uint64_t>(s));
  } else {
    for (std::uint64_t s = 0; s < shards; ++s) shard_job(s);
  }

  SimulationCounts total;
  for (const SimulationCounts& c : per_shard) {
    total.alice_wins += c.alice_wins;
    total.bob_wins += c.bob_wins;
    total.truncated += c.truncated;
  }
  return total;
}

}  // namespace chipgame
