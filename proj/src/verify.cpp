#include "chipgame/verify.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "chipgame/core.hpp"
#include "chipgame/predicates.hpp"
#include "chipgame/prob.hpp"
#include "chipgame/reachability.hpp"

namespace chipgame {

namespace {

struct Tuple {
  std::uint64_t a, b, m, n;
};

// Lexicographic (n, m, a, b).
std::vector<Tuple> rectangular_tuples(std::uint64_t m_max, std::uint64_t n_max) {
  std::vector<Tuple> out;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    for (std::uint64_t m = 1; m <= m_max; ++m) {
      const std::uint64_t top = std::min(m, n);
      for (std::uint64_t a = 1; a < top; ++a) {
        for (std::uint64_t b = a + 1; b < top; ++b) out.push_back({a, b, m, n});
      }
    }
  }
  return out;
}

std::vector<Tuple> square_tuples(std::uint64_t n_max) {
  std::vector<Tuple> out;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    for (std::uint64_t a = 1; a < n; ++a) {
      for (std::uint64_t b = a + 1; b < n; ++b) out.push_back({a, b, n, n});
    }
  }
  return out;
}

// Per-tuple verdict. `skipped` marks tuples outside the hypothesis; a tuple
// may carry several counterexamples (one per bias).
struct Outcome {
  bool skipped = false;
  std::uint64_t checks = 1;
  std::vector<Counterexample> counterexamples;
};

Counterexample mismatch(const Tuple& t, bool predicted, bool observed, std::string detail = {}) {
  return {t.a, t.b, t.m, t.n, predicted, observed, std::move(detail)};
}

template <typename Check>
ScanReport run_scan(ScanKind kind, ScanRange range, const std::vector<Tuple>& tuples,
                    Execution exec, Check check) {
  std::vector<Outcome> outcomes(tuples.size());
  if (exec == Execution::Parallel) {
    const auto count = static_cast<std::int64_t>(tuples.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) outcomes[i] = check(tuples[i]);
  } else {
    for (std::size_t i = 0; i < tuples.size(); ++i) outcomes[i] = check(tuples[i]);
  }

  ScanReport report{kind, std::move(range), 0, 0, {}};
  for (Outcome& o : outcomes) {
    if (o.skipped) {
      ++report.tuples_skipped;
      continue;
    }
    report.tuples_checked += o.checks;
    for (Counterexample& c : o.counterexamples) report.counterexamples.push_back(std::move(c));
  }
  return report;
}

std::string describe(const Thm2Decomposition& dec) {
  std::ostringstream os;
  os << "d=" << dec.d << " delta=" << dec.delta << " divides_diff=" << std::boolalpha
     << dec.divides_diff << " divides_product=" << dec.divides_product;
  return os.str();
}

bool eq1_precondition(const Tuple& t) {
  return gcd(t.a + t.b, t.n) == 1 && gcd(t.b - t.a, t.n) == 1;
}

}  // namespace

std::string_view to_string(ScanKind kind) {
  switch (kind) {
    case ScanKind::Thm1:
      return "thm1";
    case ScanKind::Thm2:
      return "thm2";
    case ScanKind::Conjecture2:
      return "conj2";
    case ScanKind::Corollary:
      return "corollary";
    case ScanKind::NeverReachablePair:
      return "never_reachable_pair";
    case ScanKind::Eq1Lemma:
      return "eq1_lemma";
    case ScanKind::QBijection:
      return "q_bijection";
    case ScanKind::DiagonalContainment:
      return "diagonal_containment";
  }
  return "?";
}

ScanReport scan_thm1(std::uint64_t n_max, Execution exec) {
  return run_scan(ScanKind::Thm1, {n_max, n_max, {}}, square_tuples(n_max), exec,
                  [](const Tuple& t) {
                    Outcome o;
                    const bool predicted = thm1_condition(t.a, t.b, t.n);
                    const bool observed =
                        full_reachability_square(reachable_set(GameParams::square(t.a, t.b, t.n)));
                    if (predicted != observed) o.counterexamples.push_back(mismatch(t, predicted, observed));
                    return o;
                  });
}

ScanReport scan_thm2(std::uint64_t m_max, std::uint64_t n_max, Execution exec) {
  return run_scan(ScanKind::Thm2, {m_max, n_max, {}}, rectangular_tuples(m_max, n_max), exec,
                  [](const Tuple& t) {
                    Outcome o;
                    if (gcd4(t.a, t.b, t.m, t.n) != 1) {
                      o.skipped = true;
                      return o;
                    }
                    const Thm2Decomposition dec = thm2_condition(t.a, t.b, t.m, t.n);
                    const bool observed = all_wins_alice(reachable_set(GameParams(t.a, t.b, t.m, t.n)));
                    if (dec.holds() != observed) {
                      o.counterexamples.push_back(mismatch(t, dec.holds(), observed, describe(dec)));
                    }
                    return o;
                  });
}

ScanReport scan_conjecture2(std::uint64_t m_max, std::uint64_t n_max, Execution exec) {
  return run_scan(ScanKind::Conjecture2, {m_max, n_max, {}}, rectangular_tuples(m_max, n_max),
                  exec, [](const Tuple& t) {
                    Outcome o;
                    if (t.n % t.m != 0) {
                      o.skipped = true;
                      return o;
                    }
                    const bool all_alice = all_wins_alice(reachable_set(GameParams(t.a, t.b, t.m, t.n)));
                    if (!conjecture2_implication(t.a, t.b, t.m, t.n, all_alice)) {
                      o.counterexamples.push_back(mismatch(t, true, false, "all_wins_alice=true"));
                    }
                    return o;
                  });
}

ScanReport scan_corollary(std::uint64_t m_max, std::uint64_t n_max,
                          const std::vector<Rational>& biases, Execution exec) {
  return run_scan(ScanKind::Corollary, {m_max, n_max, biases}, rectangular_tuples(m_max, n_max),
                  exec, [&biases](const Tuple& t) {
                    Outcome o;
                    if (gcd4(t.a, t.b, t.m, t.n) != 1) {
                      o.skipped = true;
                      return o;
                    }
                    o.checks = biases.size();
                    const GameParams params(t.a, t.b, t.m, t.n);
                    const Thm2Decomposition dec = thm2_condition(t.a, t.b, t.m, t.n);
                    for (const Rational& bias : biases) {
                      const ProbabilityReport pr = solve_probabilities(params, bias);
                      const bool bob_zero = sgn(pr.p_bob) == 0;
                      if (bob_zero != dec.holds()) {
                        o.counterexamples.push_back(mismatch(
                            t, dec.holds(), bob_zero,
                            "bias=" + format_rational(bias) + " p_bob=" + format_rational(pr.p_bob)));
                      }
                    }
                    return o;
                  });
}

ScanReport scan_never_reachable_pair(std::uint64_t n_max, Execution exec) {
  return run_scan(ScanKind::NeverReachablePair, {n_max, n_max, {}}, square_tuples(n_max), exec,
                  [](const Tuple& t) {
                    Outcome o;
                    const ReachabilityReport r = reachable_set(GameParams::square(t.a, t.b, t.n));
                    if (r.contains({t.a, t.a})) o.counterexamples.push_back(mismatch(t, false, true, "(a,a) reachable"));
                    if (r.contains({t.b, t.b})) o.counterexamples.push_back(mismatch(t, false, true, "(b,b) reachable"));
                    return o;
                  });
}

ScanReport scan_eq1_lemma(std::uint64_t n_max, Execution exec) {
  return run_scan(ScanKind::Eq1Lemma, {n_max, n_max, {}}, square_tuples(n_max), exec,
                  [](const Tuple& t) {
                    Outcome o;
                    if (!eq1_precondition(t)) {
                      o.skipped = true;
                      return o;
                    }
                    if (!eq1_lemma_check(t.a, t.b, t.n)) o.counterexamples.push_back(mismatch(t, true, false));
                    return o;
                  });
}

ScanReport scan_q_bijection(std::uint64_t n_max, Execution exec) {
  return run_scan(ScanKind::QBijection, {n_max, n_max, {}}, square_tuples(n_max), exec,
                  [](const Tuple& t) {
                    Outcome o;
                    if (!eq1_precondition(t)) {
                      o.skipped = true;
                      return o;
                    }
                    const GameParams params = GameParams::square(t.a, t.b, t.n);
                    std::vector<bool> hit(params.state_count(), false);
                    std::uint64_t distinct = 0;
                    for (std::uint64_t i = 0; i < t.n; ++i) {
                      for (std::uint64_t j = 0; j < t.n; ++j) {
                        const std::size_t idx = index_of(
                            params, q_param(params, static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)));
                        if (!hit[idx]) {
                          hit[idx] = true;
                          ++distinct;
                        }
                      }
                    }
                    if (distinct != params.state_count()) {
                      o.counterexamples.push_back(
                          mismatch(t, true, false, "image size " + std::to_string(distinct)));
                    }
                    return o;
                  });
}

ScanReport scan_diagonal_containment(std::uint64_t n_max, Execution exec) {
  return run_scan(ScanKind::DiagonalContainment, {n_max, n_max, {}}, square_tuples(n_max), exec,
                  [](const Tuple& t) {
                    Outcome o;
                    const GameParams params = GameParams::square(t.a, t.b, t.n);
                    const ReachabilityReport r = reachable_set(params);
                    std::vector<std::set<Position>> rounds;
                    for (Position p : r.discovery_order()) {
                      const std::uint32_t d = *r.depth(p);
                      while (rounds.size() <= d) rounds.push_back(round_diagonal(params, rounds.size()));
                      if (!rounds[d].contains(p)) {
                        std::ostringstream os;
                        os << p << " at depth " << d;
                        o.counterexamples.push_back(mismatch(t, true, false, os.str()));
                      }
                    }
                    return o;
                  });
}

std::vector<ScanReport> scan_invariants(std::uint64_t n_max, Execution exec) {
  return {scan_never_reachable_pair(n_max, exec), scan_eq1_lemma(n_max, exec),
          scan_q_bijection(n_max, exec), scan_diagonal_containment(n_max, exec)};
}

std::uint64_t square_tuple_count(std::uint64_t n_max) {
  // sum over n of C(n-1, 2) = C(n_max, 3)
  if (n_max < 3) return 0;
  return n_max * (n_max - 1) * (n_max - 2) / 6;
}

std::uint64_t rectangular_tuple_count(std::uint64_t m_max, std::uint64_t n_max) {
  // (m_max + n_max - 2k + 1) pairs (m, n) have min(m, n) = k.
  std::uint64_t total = 0;
  for (std::uint64_t k = 3; k <= std::min(m_max, n_max); ++k) {
    total += (k - 1) * (k - 2) / 2 * (m_max + n_max + 1 - 2 * k);
  }
  return total;
}

}  // namespace chipgame
