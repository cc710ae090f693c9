#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chipgame/execution.hpp"
#include "chipgame/rational.hpp"

namespace chipgame {

enum class ScanKind {
  Thm1,
  Thm2,
  Conjecture2,
  Corollary,
  NeverReachablePair,
  Eq1Lemma,
  QBijection,
  DiagonalContainment,
};

std::string_view to_string(ScanKind kind);

struct ScanRange {
  std::uint64_t m_max = 0;  // equals n_max for square-game scans
  std::uint64_t n_max = 0;
  std::vector<Rational> biases;  // corollary scans only
};

/// A tuple where the predicate and the observed ground truth disagree.
struct Counterexample {
  std::uint64_t a = 0, b = 0, m = 0, n = 0;
  bool predicted = false;
  bool observed = false;
  std::string detail;
};

struct ScanReport {
  ScanKind kind;
  ScanRange range;
  std::uint64_t tuples_checked = 0;
  std::uint64_t tuples_skipped = 0;  // outside the statement's hypothesis
  std::vector<Counterexample> counterexamples;

  bool passed() const noexcept { return counterexamples.empty(); }
};

// Every scan walks tuples in lexicographic (n, m, a, b) order with
// 0 < a < b < min(m, n), and reports counterexamples in that order whatever
// the execution policy.

/// thm1_condition vs full_reachability_square for all square tuples, n <= n_max.
ScanReport scan_thm1(std::uint64_t n_max, Execution exec = Execution::Parallel);

/// thm2_condition vs all_wins_alice; tuples with gcd(a,b,m,n) != 1 skipped.
ScanReport scan_thm2(std::uint64_t m_max, std::uint64_t n_max,
                     Execution exec = Execution::Parallel);

/// The implication all_wins_alice => m | b^2 - a^2 on tuples with m | n;
/// the rest are skipped.
ScanReport scan_conjecture2(std::uint64_t m_max, std::uint64_t n_max,
                            Execution exec = Execution::Parallel);

/// Exact p_bob == 0 vs thm2_condition for each bias; gcd != 1 skipped.
/// tuples_checked counts (tuple, bias) pairs.
ScanReport scan_corollary(std::uint64_t m_max, std::uint64_t n_max,
                          const std::vector<Rational>& biases,
                          Execution exec = Execution::Parallel);

/// Neither (a,a) nor (b,b) is reachable in any square game with n <= n_max.
ScanReport scan_never_reachable_pair(std::uint64_t n_max, Execution exec = Execution::Parallel);

/// eq1_lemma_check on square tuples meeting gcd(a+b,n) = gcd(b-a,n) = 1.
ScanReport scan_eq1_lemma(std::uint64_t n_max, Execution exec = Execution::Parallel);

/// The q parametrization is a bijection of {0..n-1}^2 onto Z_n x Z_n on
/// square tuples meeting the same gcd precondition.
ScanReport scan_q_bijection(std::uint64_t n_max, Execution exec = Execution::Parallel);

/// Every reachable position at BFS depth r lies in round_diagonal(r).
ScanReport scan_diagonal_containment(std::uint64_t n_max, Execution exec = Execution::Parallel);

/// The four square-game property suites above, in declaration order.
std::vector<ScanReport> scan_invariants(std::uint64_t n_max, Execution exec = Execution::Parallel);

/// Closed-form tuple counts used to cross-check scan completeness.
std::uint64_t square_tuple_count(std::uint64_t n_max);
std::uint64_t rectangular_tuple_count(std::uint64_t m_max, std::uint64_t n_max);

}  // namespace chipgame
