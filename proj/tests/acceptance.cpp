// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chipgame/prob.hpp"
#include "chipgame/reachability.hpp"
#include "chipgame/verify.hpp"

using namespace chipgame;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

Verdict from_scan(const ScanReport& r) {
  std::ostringstream os;
  os << "checked=" << r.tuples_checked << " skipped=" << r.tuples_skipped
     << " counterexamples=" << r.counterexamples.size();
  return {r.passed(), os.str()};
}

GameParams random_game(std::mt19937_64& rng, std::uint64_t max_modulus) {
  std::uniform_int_distribution<std::uint64_t> mod(3, max_modulus);
  const std::uint64_t m = mod(rng), n = mod(rng);
  const std::uint64_t top = std::min(m, n);
  std::uniform_int_distribution<std::uint64_t> low(1, top - 2);
  const std::uint64_t a = low(rng);
  std::uniform_int_distribution<std::uint64_t> high(a + 1, top - 1);
  return GameParams(a, high(rng), m, n);
}

Verdict thm1_equivalence() {
  const ScanReport r = scan_thm1(30);
  Verdict v = from_scan(r);
  v.pass = v.pass && r.tuples_checked == square_tuple_count(30);
  return v;
}

Verdict thm2_equivalence() {
  const ScanReport r = scan_thm2(20, 20);
  Verdict v = from_scan(r);
  v.pass = v.pass && r.tuples_checked + r.tuples_skipped == rectangular_tuple_count(20, 20);
  return v;
}

Verdict conjecture2_instance() { return from_scan(scan_conjecture2(20, 20)); }

Verdict never_reachable_pair() {
  const ScanReport r = scan_never_reachable_pair(30);
  Verdict v = from_scan(r);
  v.pass = v.pass && r.tuples_checked == square_tuple_count(30);
  return v;
}

Verdict corollary() {
  return from_scan(scan_corollary(14, 14, {Rational(1, 2), Rational(1, 3)}));
}

Verdict eq1_lemma() { return from_scan(scan_eq1_lemma(100)); }

Verdict q_bijection() { return from_scan(scan_q_bijection(25)); }

Verdict witness_soundness() {
  std::uint64_t games = 0, witnesses = 0, bad = 0;
  for (std::uint64_t n = 3; n <= 12; ++n) {
    for (std::uint64_t m = 3; m <= 12; ++m) {
      for (std::uint64_t a = 1; a < std::min(m, n); ++a) {
        for (std::uint64_t b = a + 1; b < std::min(m, n); ++b) {
          const GameParams params(a, b, m, n);
          const ReachabilityReport report = reachable_set(params);
          ++games;
          for (Position pos : report.reachable()) {
            const WitnessPath w = witness_path(report, pos);
            ++witnesses;
            if (!witness_is_valid(params, w) || w.moves.size() != *report.depth(pos)) ++bad;
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << "games=" << games << " witnesses=" << witnesses << " violations=" << bad;
  return {bad == 0, os.str()};
}

Verdict normalization_and_residual() {
  std::mt19937_64 rng(0xC0FFEE);
  std::uint64_t bad = 0, states = 0;
  for (int i = 0; i < 50; ++i) {
    const ProbabilityReport r = solve_probabilities(random_game(rng, 12), Rational(1, 2));
    if (r.p_alice + r.p_bob + r.p_nonterminating != 1) ++bad;
    for (const Rational& res : solver_residuals(r)) {
      ++states;
      if (sgn(res) != 0) ++bad;
    }
  }
  std::ostringstream os;
  os << "tuples=50 residuals=" << states << " violations=" << bad;
  return {bad == 0, os.str()};
}

Verdict monte_carlo_agreement() {
  constexpr std::uint64_t kTrials = 10000;
  std::mt19937_64 rng(0x5EED);
  int bad = 0;
  double worst = 0;  // largest |freq - p| in units of the allowed band
  for (int i = 0; i < 10; ++i) {
    const GameParams params = random_game(rng, 12);
    const ProbabilityReport exact = solve_probabilities(params, Rational(1, 2));
    const SimulationCounts c = simulate(params, Rational(1, 2), kTrials, 1000 + i);
    const double p = exact.p_alice.get_d();
    const double freq = static_cast<double>(c.alice_wins) / kTrials;
    const double band = 4 * std::sqrt(p * (1 - p) / kTrials);
    const double gap = std::abs(freq - p);
    if (gap > band) ++bad;
    if (band > 0) worst = std::max(worst, gap / band);
  }
  std::ostringstream os;
  os << "tuples=10 trials=" << kTrials << " outside_band=" << bad << " worst_gap/band=" << worst;
  return {bad == 0, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"C1  full reachability criterion <=> BFS, square n<=30", thm1_equivalence},
      {"C2  all-wins-Alice criterion <=> BFS, m,n<=20, gcd=1", thm2_equivalence},
      {"C3  all_wins_alice => m | b^2-a^2 when m | n, m,n<=20", conjecture2_instance},
      {"C4  (a,a),(b,b) never reachable, square n<=30", never_reachable_pair},
      {"C5  exact p_bob = 0 <=> criterion, m,n<=14, biases 1/2,1/3", corollary},
      {"C6  k(a+b), k(b-a) nonzero mod n, n<=100", eq1_lemma},
      {"C7  q-map bijection, square n<=25", q_bijection},
      {"C8  witness replay soundness, m,n<=12", witness_soundness},
      {"C9  exact normalization and zero residual, 50 tuples", normalization_and_residual},
      {"C10 Monte Carlo within 4 sigma of exact p_alice, 10 tuples", monte_carlo_agreement},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Verdict v = check();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %-62s %s (%.1fs)\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !v.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
