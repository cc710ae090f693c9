#include "chipgame/predicates.hpp"

#include <numeric>
#include <sstream>

#include "chipgame/error.hpp"

namespace chipgame {

namespace {

using Wide = unsigned __int128;

// b^2 - a^2 mod `modulus`, for a < b.
std::uint64_t square_diff_mod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus) {
  const Wide diff = Wide{b} * b - Wide{a} * a;
  return static_cast<std::uint64_t>(diff % modulus);
}

[[noreturn]] void domain_error(const char* op, std::uint64_t a, std::uint64_t b,
                               const char* why) {
  std::ostringstream os;
  os << op << "(a=" << a << ", b=" << b << "): " << why;
  throw Error(ErrorCode::Domain, os.str());
}

}  // namespace

std::uint64_t gcd(std::uint64_t u, std::uint64_t v) noexcept { return std::gcd(u, v); }

std::uint64_t lcm(std::uint64_t u, std::uint64_t v) noexcept { return std::lcm(u, v); }

std::uint64_t gcd4(std::uint64_t a, std::uint64_t b, std::uint64_t m, std::uint64_t n) noexcept {
  return gcd(gcd(a, b), gcd(m, n));
}

bool thm1_condition(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  if (!(0 < a && a < b && b < n)) domain_error("thm1_condition", a, b, "requires 0 < a < b < n");
  const Wide wn = n;
  const bool a_ne_2b = Wide{a} % wn != (Wide{2} * b) % wn;
  const bool b_ne_2a = Wide{b} % wn != (Wide{2} * a) % wn;
  return a_ne_2b && b_ne_2a && gcd(square_diff_mod(a, b, n), n) == 1;
}

Thm2Decomposition thm2_condition(std::uint64_t a, std::uint64_t b, std::uint64_t m,
                                 std::uint64_t n) {
  if (!(0 < a && a < b && b < m && b < n)) {
    domain_error("thm2_condition", a, b, "requires 0 < a < b < min(m, n)");
  }
  if (gcd4(a, b, m, n) != 1) {
    std::ostringstream os;
    os << "gcd(a, b, m, n) = " << gcd4(a, b, m, n) << " for (a=" << a << ", b=" << b
       << ", m=" << m << ", n=" << n << "); the criterion requires 1";
    throw Error(ErrorCode::HypothesisViolation, os.str());
  }
  Thm2Decomposition out;
  out.d = gcd(a, b);
  out.delta = gcd(m, n);
  out.divides_diff = square_diff_mod(a, b, m) == 0;
  out.divides_product = (Wide{out.d} * out.delta) % m == 0;
  return out;
}

bool eq1_lemma_check(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  if (!(0 < a && a < b && b < n)) domain_error("eq1_lemma_check", a, b, "requires 0 < a < b < n");
  if (gcd(a + b, n) != 1 || gcd(b - a, n) != 1) {
    domain_error("eq1_lemma_check", a, b, "requires gcd(a+b, n) = gcd(b-a, n) = 1");
  }
  const std::uint64_t sum = (a + b) % n;
  const std::uint64_t diff = (b - a) % n;
  std::uint64_t ks = 0, kd = 0;  // running k*(a+b), k*(b-a) mod n
  for (std::uint64_t k = 1; k < n; ++k) {
    ks = (ks + sum) % n;
    kd = (kd + diff) % n;
    if (ks == 0 || kd == 0) return false;
  }
  return true;
}

bool conjecture2_implication(std::uint64_t a, std::uint64_t b, std::uint64_t m,
                             std::uint64_t n, bool all_alice) {
  if (m == 0 || n % m != 0) {
    std::ostringstream os;
    os << "conjecture2_implication requires m | n, got m=" << m << ", n=" << n;
    throw Error(ErrorCode::Domain, os.str());
  }
  if (!(0 < a && a < b)) domain_error("conjecture2_implication", a, b, "requires 0 < a < b");
  return !all_alice || square_diff_mod(a, b, m) == 0;
}

}  // namespace chipgame
