#pragma once

#include <cstdint>

namespace chipgame {

std::uint64_t gcd(std::uint64_t u, std::uint64_t v) noexcept;
std::uint64_t lcm(std::uint64_t u, std::uint64_t v) noexcept;

/// gcd(a, b, m, n).
std::uint64_t gcd4(std::uint64_t a, std::uint64_t b, std::uint64_t m, std::uint64_t n) noexcept;

/// Full reachability criterion for the square game:
/// a != 2b and 2a != b (mod n), and gcd(b^2 - a^2, n) = 1.
/// Domain error unless 0 < a < b < n.
bool thm1_condition(std::uint64_t a, std::uint64_t b, std::uint64_t n);

/// Ingredients of the all-wins-Alice criterion, kept so reports can say which
/// half failed.
struct Thm2Decomposition {
  std::uint64_t d = 0;      // gcd(a, b)
  std::uint64_t delta = 0;  // gcd(m, n)
  bool divides_diff = false;     // m | b^2 - a^2
  bool divides_product = false;  // m | d * delta

  bool holds() const noexcept { return divides_diff && divides_product; }
};

/// Domain error unless 0 < a < b < min(m, n); HypothesisViolation when
/// gcd(a, b, m, n) != 1.
Thm2Decomposition thm2_condition(std::uint64_t a, std::uint64_t b, std::uint64_t m,
                                 std::uint64_t n);

/// Exhaustively checks k(a+b) != 0 and k(b-a) != 0 (mod n) for 1 <= k < n.
/// Domain error unless gcd(a+b, n) = gcd(b-a, n) = 1 and 0 < a < b < n.
bool eq1_lemma_check(std::uint64_t a, std::uint64_t b, std::uint64_t n);

/// (not all_alice) or m | b^2 - a^2. Domain error unless m | n.
bool conjecture2_implication(std::uint64_t a, std::uint64_t b, std::uint64_t m,
                             std::uint64_t n, bool all_alice);

}  // namespace chipgame
